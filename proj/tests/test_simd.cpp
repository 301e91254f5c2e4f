#include <doctest.h>

#include <random>
#include <vector>

#include "dpar/error.hpp"
#include "dpar/simd/kernels.hpp"

using namespace dpar::simd;

namespace {

std::vector<double> naive(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Backend> available() {
  std::vector<Backend> out;
  for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon})
    if (backend_available(b)) out.push_back(b);
  return out;
}

}  // namespace

TEST_CASE("scalar backend is always available") {
  CHECK(backend_available(Backend::scalar));
  CHECK(backend_available(active_backend()));
  MESSAGE("active backend: " << to_string(active_backend()));
}

TEST_CASE("convolution matches the naive reference on every backend") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> len(1, 70);
  std::uniform_int_distribution<int> count(0, 5);
  std::uniform_real_distribution<double> real(0.0, 1e6);
  for (Backend backend : available()) {
    CAPTURE(to_string(backend));
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<double> a(len(gen)), b(len(gen));
      const bool integral = trial % 2 == 0;
      for (auto& x : a) x = integral ? count(gen) : real(gen);
      for (auto& x : b) x = integral ? count(gen) : real(gen);
      std::vector<double> out(a.size() + b.size() - 1, 0.0);
      convolve_accumulate(a, b, out, backend);
      const auto expect = naive(a, b);
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (integral) {
          REQUIRE(out[i] == expect[i]);  // small integers are exact in double
        } else {
          REQUIRE(out[i] == doctest::Approx(expect[i]).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("vector backends agree with scalar bit for bit on integer histograms") {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<int> count(0, 1000);
  std::vector<double> a(400), b(517);
  for (auto& x : a) x = count(gen);
  for (auto& x : b) x = count(gen);
  std::vector<double> ref(a.size() + b.size() - 1, 0.0);
  scalar::convolve_accumulate(a, b, ref);
  for (Backend backend : available()) {
    std::vector<double> out(ref.size(), 0.0);
    convolve_accumulate(a, b, out, backend);
    CHECK(out == ref);
  }
}

TEST_CASE("convolution accumulates and checks the output size") {
  std::vector<double> a{1, 2}, b{3, 4};
  std::vector<double> out{10, 10, 10};
  convolve_accumulate(a, b, out, Backend::scalar);
  CHECK(out == std::vector<double>{13, 20, 18});
  std::vector<double> small(2);
  CHECK_THROWS_AS(convolve_accumulate(a, b, small, Backend::scalar), dpar::ContractError);
}
