#pragma once

// Face lists transcribed from reference drawings. Faces are listed in drawing
// order; only the sets matter, and drawn patterns may be translated.

#include <array>
#include <cstdint>
#include <vector>

namespace reference {

struct RefFace {
  std::array<std::int64_t, 3> x;
  int type;
};

// Sigma_3^7(U) drawn in three layers: U, then the faces added up to level 4, then up to level 7.
inline const std::vector<RefFace> kLayerU = {
    {{0, 0, 0}, 1},
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 3},
};

inline const std::vector<RefFace> kLayer4 = {
    {{-1, 0, 1}, 1},
    {{1, 1, -1}, 1},
    {{-1, 1, 0}, 1},
    {{2, -1, 0}, 1},
    {{0, -1, 1}, 1},
    {{2, 0, -1}, 1},
    {{3, -1, 0}, 2},
    {{1, -1, 1}, 2},
    {{3, 0, -1}, 2},
    {{1, 0, 0}, 2},
    {{-1, 0, 1}, 2},
    {{1, 1, -1}, 2},
    {{-1, 1, 0}, 2},
    {{2, -1, 0}, 2},
    {{0, -1, 1}, 2},
    {{2, 0, -1}, 2},
    {{2, 1, -1}, 3},
    {{0, 1, 0}, 3},
    {{3, -1, 0}, 3},
    {{1, -1, 1}, 3},
    {{3, 0, -1}, 3},
    {{1, 0, 0}, 3},
    {{-1, 0, 1}, 3},
    {{1, 1, -1}, 3},
    {{-1, 1, 0}, 3},
    {{2, -1, 0}, 3},
    {{0, -1, 1}, 3},
    {{2, 0, -1}, 3},
};

inline const std::vector<RefFace> kLayer7 = {
    {{4, -2, 0}, 1},
    {{6, -1, -2}, 1},
    {{4, -1, -1}, 1},
    {{7, -3, -1}, 1},
    {{5, -3, 0}, 1},
    {{7, -2, -2}, 1},
    {{5, -2, -1}, 1},
    {{8, -3, -1}, 2},
    {{6, -3, 0}, 2},
    {{8, -2, -2}, 2},
    {{6, -2, -1}, 2},
    {{4, -2, 0}, 2},
    {{6, -1, -2}, 2},
    {{4, -1, -1}, 2},
    {{7, -3, -1}, 2},
    {{5, -3, 0}, 2},
    {{7, -2, -2}, 2},
    {{5, -2, -1}, 2},
    {{7, -1, -2}, 3},
    {{5, -1, -1}, 3},
    {{8, -3, -1}, 3},
    {{6, -3, 0}, 3},
    {{8, -2, -2}, 3},
    {{6, -2, -1}, 3},
    {{4, -2, 0}, 3},
    {{6, -1, -2}, 3},
    {{4, -1, -1}, 3},
    {{7, -3, -1}, 3},
    {{5, -3, 0}, 3},
    {{7, -2, -2}, 3},
    {{5, -2, -1}, 3},
    {{0, 3, -2}, 1},
    {{3, 1, -2}, 1},
    {{2, 4, -4}, 1},
    {{5, 2, -4}, 1},
    {{0, 4, -3}, 1},
    {{3, 2, -3}, 1},
    {{6, 0, -3}, 1},
    {{1, 2, -2}, 1},
    {{4, 0, -2}, 1},
    {{3, 3, -4}, 1},
    {{6, 1, -4}, 1},
    {{1, 3, -3}, 1},
    {{4, 1, -3}, 1},
    {{7, 0, -3}, 2},
    {{2, 2, -2}, 2},
    {{5, 0, -2}, 2},
    {{4, 3, -4}, 2},
    {{7, 1, -4}, 2},
    {{2, 3, -3}, 2},
    {{5, 1, -3}, 2},
    {{0, 3, -2}, 2},
    {{3, 1, -2}, 2},
    {{2, 4, -4}, 2},
    {{5, 2, -4}, 2},
    {{0, 4, -3}, 2},
    {{3, 2, -3}, 2},
    {{6, 0, -3}, 2},
    {{1, 2, -2}, 2},
    {{4, 0, -2}, 2},
    {{3, 3, -4}, 2},
    {{6, 1, -4}, 2},
    {{1, 3, -3}, 2},
    {{4, 1, -3}, 2},
    {{3, 4, -4}, 3},
    {{6, 2, -4}, 3},
    {{1, 4, -3}, 3},
    {{4, 2, -3}, 3},
    {{7, 0, -3}, 3},
    {{2, 2, -2}, 3},
    {{5, 0, -2}, 3},
    {{4, 3, -4}, 3},
    {{7, 1, -4}, 3},
    {{2, 3, -3}, 3},
    {{5, 1, -3}, 3},
    {{0, 3, -2}, 3},
    {{3, 1, -2}, 3},
    {{2, 4, -4}, 3},
    {{5, 2, -4}, 3},
    {{0, 4, -3}, 3},
    {{3, 2, -3}, 3},
    {{6, 0, -3}, 3},
    {{1, 2, -2}, 3},
    {{4, 0, -2}, 3},
    {{3, 3, -4}, 3},
    {{6, 1, -4}, 3},
    {{1, 3, -3}, 3},
    {{4, 1, -3}, 3},
    {{-3, -1, 3}, 1},
    {{-4, 2, 1}, 1},
    {{0, -3, 3}, 1},
    {{-2, 3, -1}, 1},
    {{2, -2, 1}, 1},
    {{-3, 0, 2}, 1},
    {{-4, 3, 0}, 1},
    {{0, -2, 2}, 1},
    {{3, -4, 2}, 1},
    {{-2, -2, 3}, 1},
    {{-3, 1, 1}, 1},
    {{1, -4, 3}, 1},
    {{-1, 2, -1}, 1},
    {{3, -3, 1}, 1},
    {{-2, -1, 2}, 1},
    {{-3, 2, 0}, 1},
    {{1, -3, 2}, 1},
    {{4, -4, 2}, 2},
    {{-1, -2, 3}, 2},
    {{-2, 1, 1}, 2},
    {{2, -4, 3}, 2},
    {{0, 2, -1}, 2},
    {{4, -3, 1}, 2},
    {{-1, -1, 2}, 2},
    {{-2, 2, 0}, 2},
    {{2, -3, 2}, 2},
    {{-3, -1, 3}, 2},
    {{-4, 2, 1}, 2},
    {{0, -3, 3}, 2},
    {{-2, 3, -1}, 2},
    {{2, -2, 1}, 2},
    {{-3, 0, 2}, 2},
    {{-4, 3, 0}, 2},
    {{0, -2, 2}, 2},
    {{3, -4, 2}, 2},
    {{-2, -2, 3}, 2},
    {{-3, 1, 1}, 2},
    {{1, -4, 3}, 2},
    {{-1, 2, -1}, 2},
    {{3, -3, 1}, 2},
    {{-2, -1, 2}, 2},
    {{-3, 2, 0}, 2},
    {{1, -3, 2}, 2},
    {{-1, 3, -1}, 3},
    {{3, -2, 1}, 3},
    {{-2, 0, 2}, 3},
    {{-3, 3, 0}, 3},
    {{1, -2, 2}, 3},
    {{4, -4, 2}, 3},
    {{-1, -2, 3}, 3},
    {{-2, 1, 1}, 3},
    {{2, -4, 3}, 3},
    {{0, 2, -1}, 3},
    {{4, -3, 1}, 3},
    {{-1, -1, 2}, 3},
    {{-2, 2, 0}, 3},
    {{2, -3, 2}, 3},
    {{-3, -1, 3}, 3},
    {{-4, 2, 1}, 3},
    {{0, -3, 3}, 3},
    {{-2, 3, -1}, 3},
    {{2, -2, 1}, 3},
    {{-3, 0, 2}, 3},
    {{-4, 3, 0}, 3},
    {{0, -2, 2}, 3},
    {{3, -4, 2}, 3},
    {{-2, -2, 3}, 3},
    {{-3, 1, 1}, 3},
    {{1, -4, 3}, 3},
    {{-1, 2, -1}, 3},
    {{3, -3, 1}, 3},
    {{-2, -1, 2}, 3},
    {{-3, 2, 0}, 3},
    {{1, -3, 2}, 3},
};

// Covering example: three small templates and a pattern covered by them.
inline const std::vector<RefFace> kCoverTemplate1 = {
    {{0, 0, 0}, 1},
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 3},
    {{-1, 1, 0}, 2},
    {{-1, 1, 0}, 1},
    {{-1, 1, 0}, 3},
    {{0, 1, 0}, 3},
    {{0, 1, 2}, 3},
};

inline const std::vector<RefFace> kCoverTemplate2 = {
    {{0, 0, 0}, 1},
    {{0, 0, 0}, 3},
    {{1, 0, 0}, 3},
    {{1, -1, 0}, 3},
    {{1, -2, 0}, 3},
};

inline const std::vector<RefFace> kCoverTemplate3 = {
    {{0, 0, 0}, 1},
    {{0, -1, 0}, 1},
    {{-1, 0, 1}, 3},
    {{-1, -1, 1}, 3},
    {{-1, 1, 0}, 2},
};

inline const std::vector<RefFace> kCoverPattern = {
    {{-2, 0, 1}, 3},
    {{0, 2, -1}, 3},
    {{-1, -1, 1}, 1},
    {{1, 1, -1}, 1},
    {{0, 1, 0}, 3},
    {{1, -2, 0}, 3},
    {{0, 0, 0}, 2},
    {{-1, 2, 0}, 1},
    {{-1, 0, 1}, 3},
    {{-2, 4, 0}, 3},
    {{-3, 2, 1}, 1},
    {{-2, 3, 0}, 1},
    {{-3, 0, 2}, 3},
    {{0, 2, -1}, 2},
    {{-1, -1, 1}, 2},
    {{-2, 1, 1}, 1},
    {{-3, 4, 1}, 3},
    {{-2, 5, 0}, 3},
    {{-1, 4, 0}, 3},
    {{0, -1, 1}, 3},
    {{0, 0, 0}, 1},
    {{-2, 0, 1}, 1},
    {{-1, 1, 0}, 1},
    {{-1, -1, 1}, 3},
    {{1, 2, 1}, 3},
    {{1, 1, -1}, 3},
    {{-2, 3, 0}, 2},
    {{0, 2, -1}, 1},
    {{1, 0, 0}, 3},
    {{-1, 2, 0}, 3},
    {{-3, 1, 2}, 3},
    {{0, -2, 1}, 3},
    {{0, 3, -1}, 1},
    {{-2, 2, 1}, 3},
    {{-3, 2, 1}, 3},
    {{1, -1, 0}, 3},
    {{-1, 3, 0}, 3},
    {{-1, 0, 3}, 3},
    {{-1, 1, 0}, 2},
    {{1, -1, 0}, 1},
    {{-3, 5, 0}, 2},
    {{-2, 1, 1}, 3},
    {{-3, 3, 1}, 3},
    {{-3, 5, 0}, 3},
    {{-2, 3, 0}, 3},
    {{0, 1, 2}, 3},
    {{-2, 0, 1}, 2},
    {{-2, 4, 0}, 1},
    {{1, -2, 0}, 1},
    {{1, 2, -1}, 3},
    {{-1, 5, -1}, 2},
    {{-3, 2, 1}, 2},
    {{0, 0, 0}, 3},
    {{0, 4, -1}, 1},
    {{-1, 1, 0}, 3},
    {{-3, 5, 0}, 1},
    {{1, 1, -1}, 2},
    {{-1, 1, 0}, 3},
    {{-2, 3, 0}, 1},
    {{0, 0, 0}, 2},
};

// Rows of the image table: a two- or three-face template and its images under Sigma_1, Sigma_2, Sigma_3.
inline const std::vector<RefFace> kRow0Template = {
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 1},
};

inline const std::vector<RefFace> kRow0Image1 = {
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 1},
    {{1, 0, 0}, 2},
    {{0, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow0Image2 = {
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 1},
    {{0, 0, 0}, 3},
    {{1, 0, 0}, 2},
};

inline const std::vector<RefFace> kRow0Image3 = {
    {{1, 0, 0}, 3},
    {{1, 0, 0}, 2},
};

inline const std::vector<RefFace> kRow1Template = {
    {{0, 0, 0}, 1},
    {{-1, 1, 0}, 2},
};

inline const std::vector<RefFace> kRow1Image1 = {
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 1},
    {{0, 0, 0}, 3},
    {{-1, 1, 0}, 2},
};

inline const std::vector<RefFace> kRow1Image2 = {
    {{2, -1, 0}, 2},
    {{2, -1, 0}, 1},
    {{1, 0, 0}, 2},
    {{2, -1, 0}, 3},
};

inline const std::vector<RefFace> kRow1Image3 = {
    {{1, 0, 0}, 2},
    {{1, -1, 1}, 3},
};

inline const std::vector<RefFace> kRow2Template = {
    {{0, 0, 0}, 1},
    {{0, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow2Image1 = {
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 1},
    {{1, 0, 0}, 3},
    {{0, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow2Image2 = {
    {{1, 0, 0}, 3},
    {{1, 0, 0}, 2},
};

inline const std::vector<RefFace> kRow2Image3 = {
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 1},
    {{1, 0, 0}, 2},
    {{0, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow3Template = {
    {{0, 0, 0}, 1},
    {{-1, 0, 1}, 3},
};

inline const std::vector<RefFace> kRow3Image1 = {
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 1},
    {{-1, 0, 1}, 3},
    {{0, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow3Image2 = {
    {{1, 0, 0}, 2},
    {{1, -1, 1}, 3},
};

inline const std::vector<RefFace> kRow3Image3 = {
    {{2, -1, 0}, 2},
    {{2, -1, 0}, 1},
    {{1, 0, 0}, 2},
    {{2, -1, 0}, 3},
};

inline const std::vector<RefFace> kRow4Template = {
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow4Image1 = {
    {{1, 0, 0}, 3},
    {{1, 0, 0}, 2},
};

inline const std::vector<RefFace> kRow4Image2 = {
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 1},
    {{1, 0, 0}, 3},
    {{0, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow4Image3 = {
    {{1, 0, 0}, 3},
    {{0, 0, 0}, 1},
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow5Template = {
    {{0, -1, 1}, 3},
    {{0, 0, 0}, 2},
};

inline const std::vector<RefFace> kRow5Image1 = {
    {{1, 0, 0}, 2},
    {{1, -1, 1}, 3},
};

inline const std::vector<RefFace> kRow5Image2 = {
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 1},
    {{-1, 0, 1}, 3},
    {{0, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow5Image3 = {
    {{2, 0, -1}, 3},
    {{1, 0, 0}, 3},
    {{2, 0, -1}, 2},
    {{2, 0, -1}, 1},
};

inline const std::vector<RefFace> kRow6Template = {
    {{0, 0, 0}, 2},
    {{1, 0, 0}, 2},
    {{0, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow6Image1 = {
    {{1, 0, 0}, 3},
    {{2, 0, 0}, 2},
    {{1, 0, 0}, 2},
};

inline const std::vector<RefFace> kRow6Image2 = {
    {{-1, 1, 0}, 1},
    {{1, 0, 0}, 3},
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 3},
    {{-1, 1, 0}, 3},
    {{0, 0, 0}, 1},
    {{-1, 1, 0}, 2},
};

inline const std::vector<RefFace> kRow6Image3 = {
    {{1, 0, 0}, 3},
    {{0, 0, 0}, 1},
    {{0, 1, 0}, 3},
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow7Template = {
    {{1, 0, 0}, 3},
    {{0, 0, 0}, 3},
    {{0, 0, 0}, 2},
};

inline const std::vector<RefFace> kRow7Image1 = {
    {{1, 0, 0}, 3},
    {{1, 0, 0}, 2},
    {{2, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow7Image2 = {
    {{1, 0, 0}, 3},
    {{0, 0, 0}, 1},
    {{0, 1, 0}, 3},
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow7Image3 = {
    {{-1, 1, 0}, 1},
    {{1, 0, 0}, 3},
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 3},
    {{-1, 1, 0}, 3},
    {{0, 0, 0}, 1},
    {{-1, 1, 0}, 2},
};

inline const std::vector<RefFace> kRow8Template = {
    {{0, 0, 0}, 1},
    {{0, 1, 0}, 3},
    {{0, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow8Image1 = {
    {{1, 0, 0}, 3},
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 1},
    {{0, 1, 0}, 3},
    {{0, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow8Image2 = {
    {{1, 0, 0}, 3},
    {{1, 0, 0}, 2},
    {{2, 0, 0}, 3},
};

inline const std::vector<RefFace> kRow8Image3 = {
    {{-1, 0, 1}, 3},
    {{1, 0, 0}, 2},
    {{-1, 0, 1}, 2},
    {{0, 0, 0}, 2},
    {{0, 0, 0}, 3},
    {{0, 0, 0}, 1},
    {{-1, 0, 1}, 1},
};

struct ImageRow {
  const std::vector<RefFace>* tmpl;
  std::array<const std::vector<RefFace>*, 3> images;
};

inline const std::array<ImageRow, 9> kImageTable = {{
    {&kRow0Template, {&kRow0Image1, &kRow0Image2, &kRow0Image3}},
    {&kRow1Template, {&kRow1Image1, &kRow1Image2, &kRow1Image3}},
    {&kRow2Template, {&kRow2Image1, &kRow2Image2, &kRow2Image3}},
    {&kRow3Template, {&kRow3Image1, &kRow3Image2, &kRow3Image3}},
    {&kRow4Template, {&kRow4Image1, &kRow4Image2, &kRow4Image3}},
    {&kRow5Template, {&kRow5Image1, &kRow5Image2, &kRow5Image3}},
    {&kRow6Template, {&kRow6Image1, &kRow6Image2, &kRow6Image3}},
    {&kRow7Template, {&kRow7Image1, &kRow7Image2, &kRow7Image3}},
    {&kRow8Template, {&kRow8Image1, &kRow8Image2, &kRow8Image3}},
}};

}  // namespace reference
