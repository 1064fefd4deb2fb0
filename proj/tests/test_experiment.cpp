#include <doctest.h>

#include <cmath>

#include "fiber/experiment.hpp"

using namespace fiber;

TEST_CASE("lamination cells are deterministic and shard independent") {
  const BigInt r = pow10(6);
  auto a = sample_laminations(r, 600, 42, {}, 1);
  auto b = sample_laminations(r, 600, 42, {}, 3);
  CHECK(to_csv_row(a) == to_csv_row(b));
  CHECK(a.n_total == 600);
  CHECK(a.n_curve == a.n_fibered + a.n_nonfibered + a.n_indeterminate);
  CHECK(a.n_curve > 0);
  auto c = sample_laminations(r, 600, 43, {}, 1);
  CHECK(to_csv_row(a) != to_csv_row(c));
}

TEST_CASE("lamination cells at small r") {
  auto c = sample_laminations(from_i64(200), 2000, 1);
  // most multicurves are not connected non-separating curves, but a definite share is
  CHECK(c.curve_fraction() > 0.1);
  CHECK(c.curve_fraction() < 0.4);
  CHECK(c.fibered_fraction() > 0.5);
}

TEST_CASE("csv rows") {
  LaminationCell c;
  c.r = pow10(20);
  c.n_total = 10;
  c.n_curve = 4;
  c.n_fibered = 1;
  c.n_nonfibered = 2;
  c.n_indeterminate = 1;
  c.seed = 7;
  CHECK(lamination_csv_header() == "r,n_total,n_curve,n_fibered,n_nonfibered,n_indeterminate,seed");
  CHECK(to_csv_row(c) == "100000000000000000000,10,4,1,2,1,7");
  CHECK(c.fibered_fraction() == doctest::Approx(1.0 / 3.0));

  GroupSampleReport g;
  g.r = 50;
  g.n = 4;
  g.n_fibered = 3;
  g.n_nonfibered = 1;
  g.seed = 2;
  CHECK(group_csv_header() == "r,n,n_fibered,fraction,ci_low,ci_high,seed");
  CHECK(to_csv_row(g).rfind("50,4,3,0.750000,", 0) == 0);
}

TEST_CASE("log decay fit recovers an exact exponential") {
  std::vector<double> x{1, 2, 3, 4, 5}, y;
  for (double v : x) y.push_back(3.0 * std::exp(-0.7 * v));
  auto f = fit_log_decay(x, y);
  CHECK(f.points == 5);
  CHECK(f.slope == doctest::Approx(-0.7));
  CHECK(std::exp(f.intercept) == doctest::Approx(3.0));
  CHECK(f.r_squared == doctest::Approx(1.0));
  y.push_back(0.0);
  x.push_back(6);
  CHECK(fit_log_decay(x, y).points == 5);
}
