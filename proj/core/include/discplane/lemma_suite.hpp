#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "discplane/covering.hpp"

namespace discplane {

struct ForbiddenTrial {
  Vec3 v;
  int substitution = 1;
  std::size_t faces = 0;  // faces of the image that were scanned
  std::vector<ForbiddenHit> hits;
};

struct AnnulusBaseCase {
  std::vector<int> word;
  bool required = false;  // at least four 3s: the check must pass
  AnnulusReport report;
};

struct LemmaSuiteReport {
  std::array<std::vector<ImageCoverCase>, 3> image_cases;
  std::vector<ForbiddenTrial> forbidden;
  std::vector<AnnulusBaseCase> annulus;

  bool image_cover_ok() const;
  bool forbidden_ok() const;
  bool annulus_ok() const;  // every required case passes
  bool passed() const { return image_cover_ok() && forbidden_ok() && annulus_ok(); }
};

struct LemmaSuiteOptions {
  std::uint64_t seed = 1;
  std::size_t forbidden_trials = 20;
  std::int64_t forbidden_radius = 6;
  std::size_t random_words = 50;  // with at least four 3s, lengths 4..8
  std::size_t sparse_words = 50;  // at most three 3s, lengths 1..6, reported only
};

// Runs the three mechanical checks behind the annulus induction: Sigma_i(Q) is
// L_FS-covered for the 27 pairs (i, Q); the images Sigma_i(Gamma_v) of random
// stepped planes with v1 + v2 > v3 contain no forbidden pattern; and
// Sigma_w(U) \ U is an annulus of U for all 81 words of length 4 and random
// longer words.
LemmaSuiteReport run_lemma_suite(const LemmaSuiteOptions& opt = {});

// Random sorted rational v = (a, b, c)/d with 0 < a <= b <= c < a + b.
Vec3 random_forbidden_free_normal(std::mt19937_64& rng);

}  // namespace discplane
