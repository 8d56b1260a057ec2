// Coupled Hamiltonicity curve for k=3, printed as CSV.
#include <cmath>
#include <iostream>

#include "hyperloose/hyperloose.hpp"

using namespace hyperloose;

int main() {
  SweepSpec s;
  s.k = 3;
  s.ns = {12, 18};
  for (int i = 0; i < 10; ++i) s.ps.push_back(0.01 * std::pow(1.4, i));
  s.trials = 40;
  s.seed = 3;
  s.jobs = 4;
  write_csv(std::cout, threshold_sweep(s));
}
