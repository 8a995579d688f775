#include "discplane/lemma_suite.hpp"

#include <algorithm>

namespace discplane {

bool LemmaSuiteReport::image_cover_ok() const {
  for (const auto& cases : image_cases)
    for (const auto& c : cases)
      if (!c.covered) return false;
  return true;
}

bool LemmaSuiteReport::forbidden_ok() const {
  return std::all_of(forbidden.begin(), forbidden.end(), [](const auto& t) { return t.hits.empty(); });
}

bool LemmaSuiteReport::annulus_ok() const {
  return std::all_of(annulus.begin(), annulus.end(),
                     [](const auto& c) { return !c.required || c.report.passed(); });
}

Vec3 random_forbidden_free_normal(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> small(1, 40), den(1, 9);
  long a = small(rng), b = small(rng);
  if (a > b) std::swap(a, b);
  std::uniform_int_distribution<long> top(b, a + b - 1);
  long c = top(rng), d = den(rng);
  return Vec3(Scalar(Rational(a, d)), Scalar(Rational(b, d)), Scalar(Rational(c, d)));
}

namespace {

std::vector<int> random_word(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> letter(1, 3);
  std::vector<int> w(len);
  for (auto& x : w) x = letter(rng);
  return w;
}

std::size_t threes(const std::vector<int>& w) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), 3)); }

}  // namespace

LemmaSuiteReport run_lemma_suite(const LemmaSuiteOptions& opt) {
  LemmaSuiteReport rep;
  for (int i = 1; i <= 3; ++i) rep.image_cases[i - 1] = image_cover_cases(i);

  std::mt19937_64 rng(opt.seed);
  for (std::size_t t = 0; t < opt.forbidden_trials; ++t) {
    ForbiddenTrial trial;
    trial.v = random_forbidden_free_normal(rng);
    trial.substitution = static_cast<int>(t % 3) + 1;
    Pattern image = sigma_fs(trial.substitution, stepped_faces(trial.v, Window{opt.forbidden_radius, {0, 0, 0}}));
    trial.faces = image.size();
    trial.hits = scan_forbidden(image);
    rep.forbidden.push_back(std::move(trial));
  }

  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d) {
          std::vector<int> w{a, b, c, d};
          rep.annulus.push_back({w, threes(w) >= 4, check_annulus_base(w)});
        }
  std::uniform_int_distribution<std::size_t> long_len(4, 8), short_len(1, 6);
  for (std::size_t k = 0; k < opt.random_words; ++k) {
    std::vector<int> w;
    do w = random_word(rng, long_len(rng));
    while (threes(w) < 4);
    rep.annulus.push_back({w, true, check_annulus_base(w)});
  }
  for (std::size_t k = 0; k < opt.sparse_words; ++k) {
    std::vector<int> w;
    do w = random_word(rng, short_len(rng));
    while (threes(w) > 3);
    rep.annulus.push_back({w, false, check_annulus_base(w)});
  }
  return rep;
}

}  // namespace discplane
