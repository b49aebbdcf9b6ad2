// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#include "test_support.hpp"

using namespace biosig;
using biosig::test::error_code_of;
using Catch::Approx;

namespace {

void check_close(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < tol);
}

}  // namespace

TEST_CASE("single-level haar by hand", "[dwt]") {
  const auto l = dwt_single(std::vector<double>{4, 6}, get_wavelet("haar"));
  REQUIRE(l.approx.size() == 1);
  CHECK(l.approx[0] == Approx(10.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(l.detail[0] == Approx(-2.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(l.approx[0] == Approx(7.0711).margin(1e-4));
  CHECK(l.detail[0] == Approx(-1.4142).margin(1e-4));

  const auto c = dwt_single(std::vector<double>(9, 3.25), get_wavelet("haar"));
  for (double d : c.detail) CHECK(std::abs(d) < 1e-12);
  CHECK(error_code_of([] { dwt_single(std::vector<double>{1.0}, get_wavelet("haar")); }) == ErrorCode::TooShort);
}

TEST_CASE("multilevel coefficients match PyWavelets symmetric mode", "[dwt]") {
  const std::vector<double> x{3, -1, 4, 1, -5, 9, 2, -6, 5, 3, 5};
  SECTION("db2") {
    const auto d = detail::wavedec_unchecked(x, get_wavelet("db2"), 2);
    check_close(d.approx, {3.487740473580836, 1.8080127018922196, 4.092708718850288, 3.539183315065849,
                           10.378284930203604}, 1e-12);
    check_close(d.detail_coeffs(2), {0.8872595264191645, -3.332531754730548, -6.8681079660838655,
                                     1.5612976320958225, 3.7778039830419323}, 1e-12);
    check_close(d.detail_coeffs(1), {2.4494897427831783, 2.69901760219493, -9.271029695236903, 3.200562886721002,
                                     3.8197369424049974, 0.44828773608402717, -1.6730326074756157}, 1e-12);
  }
  SECTION("sym4") {
    // PyWavelets ships the symlet taps rounded near 1e-12.
    const auto d = detail::wavedec_unchecked(x, get_wavelet("sym4"), 2);
    check_close(d.approx, {3.684897681511159, 3.2661224963499826, 2.8506700182827083, 1.9831149214231956,
                           9.2769831514092, -2.6711804246278983, 7.585518588332196, 4.051487438638441}, 1e-10);
    check_close(d.detail_coeffs(1), {-3.5531933769819077, -2.154343653668252, 3.5249297093009924,
                                     0.5016208299737459, -10.154460244297262, 8.026030438286407,
                                     1.5339917783920873, -0.41967370481366434, -4.297516580666005}, 1e-10);
  }
}

TEST_CASE("coefficient lengths follow floor((n + nw - 1) / 2)", "[dwt]") {
  Rng rng(2);
  const auto x = test::random_normal(1024, rng);
  const auto d = wavedec(x, get_wavelet("db6"), 3);
  std::size_t len = 1024;
  for (int i = 1; i <= 3; ++i) {
    len = (len + 12 - 1) / 2;
    CHECK(d.detail_coeffs(i).size() == len);
    CHECK(d.input_len(i + 1) == len);
  }
  CHECK(d.approx.size() == len);
  CHECK(d.detail_coeffs(1).size() > d.detail_coeffs(2).size());
  CHECK(d.detail_coeffs(2).size() > d.detail_coeffs(3).size());
}

TEST_CASE("max_level closed form", "[dwt]") {
  CHECK(max_level(1024, 16) == 6);
  CHECK(max_level(256, 8) == 5);
  CHECK(max_level(16, 16) == 0);
  CHECK(max_level(32, 16) == 0);
  CHECK(max_level(1, 2) == 0);
  // round, not floor: log2(1024/2 - 1) = 8.997
  CHECK(max_level(1024, 2) == 9);
}

TEST_CASE("level bounds", "[dwt]") {
  Rng rng(4);
  const auto x = test::random_normal(1024, rng);
  const auto w = get_wavelet("db6");
  CHECK(error_code_of([&] { wavedec(x, w, 0); }) == ErrorCode::LevelOutOfRange);
  CHECK(error_code_of([&] { wavedec(x, w, max_level(1024, 12) + 1); }) == ErrorCode::LevelOutOfRange);
  CHECK_NOTHROW(wavedec(x, w, max_level(1024, 12)));
}

TEST_CASE("perfect reconstruction", "[dwt][property]") {
  Rng rng(5);
  for (const char* name : {"haar", "db6", "sym4"}) {
    for (std::size_t n : {64u, 100u, 1024u}) {
      const auto w = get_wavelet(name);
      const auto x = test::random_normal(n, rng);
      const int levels = std::min(3, max_level(n, w.nw()));
      REQUIRE(levels >= 1);
      CHECK(test::max_abs_diff(waverec(wavedec(x, w, levels)), x) < 1e-8);
    }
  }
  // Every wavelet, short and odd lengths, via the unchecked path.
  for (const auto& name : wavelet_names()) {
    const auto w = get_wavelet(name);
    for (std::size_t n = 2; n < 70; n += 3) {
      const auto x = test::random_normal(n, rng);
      std::size_t len = n;
      for (int levels = 1; levels <= 3 && len >= 2; ++levels, len = dwt_coeff_len(len, w.nw())) {
        INFO(name << " n=" << n << " L=" << levels);
        CHECK(test::max_abs_diff(waverec(detail::wavedec_unchecked(x, w, levels)), x) < 1e-8);
      }
    }
  }
}

TEST_CASE("constants live in the approximation space", "[dwt]") {
  for (const char* name : {"haar", "db4", "sym6"}) {
    const std::vector<double> x(200, -1.75);
    auto d = wavedec(x, get_wavelet(name), 3);
    for (auto& det : d.details) std::fill(det.begin(), det.end(), 0.0);
    CHECK(test::max_abs_diff(waverec(d), x) < 1e-10);
  }
}

TEST_CASE("haar conserves energy on dyadic lengths", "[dwt][property]") {
  Rng rng(6);
  const auto x = test::random_normal(512, rng);
  const auto d = wavedec(x, get_wavelet("haar"), 5);
  double ex = 0.0, ec = 0.0;
  for (double v : x) ex += v * v;
  for (double v : d.approx) ec += v * v;
  for (const auto& det : d.details)
    for (double v : det) ec += v * v;
  CHECK(std::abs(ec - ex) <= 1e-6 * ex);
}

TEST_CASE("waverec rejects inconsistent shapes", "[dwt]") {
  Rng rng(7);
  auto d = wavedec(test::random_normal(300, rng), get_wavelet("db4"), 3);
  auto tampered = d;
  tampered.details[0].pop_back();
  CHECK(error_code_of([&] { waverec(tampered); }) == ErrorCode::ShapeMismatch);
  tampered = d;
  tampered.approx.push_back(0.0);
  CHECK(error_code_of([&] { waverec(tampered); }) == ErrorCode::ShapeMismatch);
  tampered = d;
  tampered.orig_len = 1000;
  CHECK(error_code_of([&] { waverec(tampered); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("decomposition JSON round-trips exactly", "[dwt][json]") {
  Rng rng(8);
  const auto x = test::random_normal(257, rng);
  const auto d = wavedec(x, get_wavelet("sym5"), 4);
  const auto text = to_json(d).dump();
  const auto back = decomposition_from_json(nlohmann::json::parse(text));
  CHECK(back.wavelet.name == "sym5");
  CHECK(back.levels == 4);
  CHECK(back.orig_len == 257);
  CHECK(back.approx == d.approx);
  CHECK(back.details == d.details);
  CHECK(error_code_of([] { decomposition_from_json(nlohmann::json::parse(R"({"wavelet":"db4"})")); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("Signal overload of wavedec", "[dwt]") {
  const Signal s(std::vector<double>(128, 1.0), 100.0);
  const auto d = wavedec(s, "db2", 2);
  CHECK(d.wavelet.name == "db2");
  CHECK(d.orig_len == 128);
}
