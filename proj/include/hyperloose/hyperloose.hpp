#pragma once

#include "hyperloose/absorber.hpp"
#include "hyperloose/absorption.hpp"
#include "hyperloose/connect.hpp"
#include "hyperloose/density.hpp"
#include "hyperloose/generators.hpp"
#include "hyperloose/girth.hpp"
#include "hyperloose/io.hpp"
#include "hyperloose/lab.hpp"
#include "hyperloose/loose.hpp"
#include "hyperloose/oracle.hpp"
#include "hyperloose/strip.hpp"
#include "hyperloose/template.hpp"
