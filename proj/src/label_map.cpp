// Copyright 2026 The lbptex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "lbptex/descriptors.hpp"
#include "lbptex/errors.hpp"
#include "sampling.hpp"

namespace lbptex {

const std::vector<std::uint32_t>& canonicalRankTable(int points) {
  NeighborhoodSpec{points, 1.0, SamplingMode::Nearest}.validate();
  static std::mutex mutex;
  static std::map<int, std::vector<std::uint32_t>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(points);
  if (it != cache.end()) return it->second;

  const std::uint32_t codes = 1U << points;
  std::vector<std::uint32_t> canonical(codes);
  std::vector<std::uint8_t> isCanonical(codes, 0);
  for (std::uint32_t c = 0; c < codes; ++c) {
    canonical[c] = rorMin({c, points});
    isCanonical[canonical[c]] = 1;
  }
  std::vector<std::uint32_t> rank(codes, 0);
  std::uint32_t next = 0;
  for (std::uint32_t c = 0; c < codes; ++c) {
    if (isCanonical[c] != 0) rank[c] = next++;
  }
  for (std::uint32_t c = 0; c < codes; ++c) canonical[c] = rank[canonical[c]];
  return cache.emplace(points, std::move(canonical)).first->second;
}

std::uint32_t canonicalClassCount(int points) {
  const auto& table = canonicalRankTable(points);
  return *std::max_element(table.begin(), table.end()) + 1;
}

std::uint32_t labelSpace(const VariantParams& params) {
  params.validate();
  const int P = params.spec.points;
  switch (params.variant) {
    case Variant::Classic:
    case Variant::Circ:
    case Variant::Dom:
    case Variant::Ltp:
      return 1U << P;
    case Variant::Ni:
      return params.niRotationInvariant ? canonicalClassCount(P) : (1U << P);
    case Variant::Min:
    case Variant::MinInterp:
      return canonicalClassCount(P);
    case Variant::Uni:
      return static_cast<std::uint32_t>(P + 2);
    case Variant::Num:
      return numLabelSpace(P);
    case Variant::Med:
      return static_cast<std::uint32_t>(P + 1);
    case Variant::Cen:
      return 1U << (P / 2 + 1);
    case Variant::Clbp:
      break;
  }
  throw ArgumentError("clbp produces three maps with different label spaces");
}

namespace {

constexpr int kMaxPoints = NeighborhoodSpec::kMaxPoints;

// Precomputed sampling stencil for one neighbor: integer base offset and the
// fractional position inside the 2x2 cell.
struct Tap {
  int dx = 0;
  int dy = 0;
  double fx = 0.0;
  double fy = 0.0;
};

class NeighborSampler {
 public:
  NeighborSampler(const GrayImage& img, const NeighborhoodSpec& spec,
                  SamplingMode mode)
      : img_(img), points_(spec.points) {
    NeighborhoodSpec effective = spec;
    effective.mode = mode;
    const auto offsets = neighborOffsets(effective);
    for (int p = 0; p < points_; ++p) {
      const double fx0 = std::floor(offsets[p].x);
      const double fy0 = std::floor(offsets[p].y);
      taps_[p] = {static_cast<int>(fx0), static_cast<int>(fy0),
                  offsets[p].x - fx0, offsets[p].y - fy0};
    }
  }

  int points() const { return points_; }

  std::span<const double> sample(int cx, int cy) {
    for (int p = 0; p < points_; ++p) {
      const Tap& t = taps_[p];
      const int x0 = cx + t.dx;
      const int y0 = cy + t.dy;
      if (t.fx == 0.0 && t.fy == 0.0) {
        values_[p] = img_(x0, y0);
      } else {
        values_[p] = detail::blend(img_(x0, y0), img_(x0 + 1, y0),
                                   img_(x0, y0 + 1), img_(x0 + 1, y0 + 1),
                                   t.fx, t.fy);
      }
    }
    return {values_.data(), static_cast<std::size_t>(points_)};
  }

 private:
  const GrayImage& img_;
  int points_;
  std::array<Tap, kMaxPoints> taps_{};
  std::array<double, kMaxPoints> values_{};
};

LabelMap emptyMap(int width, int height, std::uint32_t space,
                  std::string name) {
  LabelMap m;
  m.width = width;
  m.height = height;
  m.labels.assign(static_cast<std::size_t>(width) * height, 0);
  m.labelSpace = space;
  m.variant = std::move(name);
  return m;
}

struct Interior {
  int margin;
  int width;
  int height;
};

Interior checkedInterior(const GrayImage& img, const NeighborhoodSpec& spec) {
  spec.validate();
  const int m = spec.margin();
  if (img.width() <= 2 * m || img.height() <= 2 * m) {
    throw ArgumentError("image " + std::to_string(img.width()) + "x" +
                        std::to_string(img.height()) +
                        " has no interior for radius margin " +
                        std::to_string(m));
  }
  return {m, img.width() - 2 * m, img.height() - 2 * m};
}

template <typename Kernel>
void fillMap(const GrayImage& img, const Interior& in, NeighborSampler& sampler,
             LabelMap& out, Kernel&& kernel) {
  for (int y = 0; y < in.height; ++y) {
    for (int x = 0; x < in.width; ++x) {
      const int cx = x + in.margin;
      const int cy = y + in.margin;
      const auto nb = sampler.sample(cx, cy);
      out.labels[static_cast<std::size_t>(y) * in.width + x] =
          kernel(static_cast<double>(img(cx, cy)), nb);
    }
  }
}

std::vector<LabelMap> computeClbp(const GrayImage& img,
                                  const VariantParams& params,
                                  const Interior& in) {
  NeighborSampler sampler(img, params.spec, effectiveMode(params));
  const int P = params.spec.points;

  // Thresholds: mean |d_p| over the interior and mean image intensity.
  double magnitudeSum = 0.0;
  for (int y = 0; y < in.height; ++y) {
    for (int x = 0; x < in.width; ++x) {
      const double c = img(x + in.margin, y + in.margin);
      for (double g : sampler.sample(x + in.margin, y + in.margin)) {
        magnitudeSum += std::abs(g - c);
      }
    }
  }
  const double magnitudeThreshold =
      magnitudeSum / (static_cast<double>(in.width) * in.height * P);
  const double centerThreshold =
      std::accumulate(img.pixels().begin(), img.pixels().end(), 0.0) /
      static_cast<double>(img.size());

  LabelMap sign = emptyMap(in.width, in.height, 1U << P, "clbp.s");
  LabelMap magnitude = emptyMap(in.width, in.height, 1U << P, "clbp.m");
  LabelMap center = emptyMap(in.width, in.height, 2, "clbp.c");
  for (int y = 0; y < in.height; ++y) {
    for (int x = 0; x < in.width; ++x) {
      const int cx = x + in.margin;
      const int cy = y + in.margin;
      const auto parts = clbpComponents(img(cx, cy), sampler.sample(cx, cy),
                                        magnitudeThreshold, centerThreshold);
      const std::size_t i = static_cast<std::size_t>(y) * in.width + x;
      sign.labels[i] = parts.sign.value;
      magnitude.labels[i] = parts.magnitude.value;
      center.labels[i] = parts.center ? 1U : 0U;
    }
  }
  std::vector<LabelMap> maps;
  maps.push_back(std::move(sign));
  maps.push_back(std::move(magnitude));
  maps.push_back(std::move(center));
  return maps;
}

}  // namespace

std::vector<LabelMap> computeLabelMaps(const GrayImage& img,
                                       const VariantParams& params) {
  params.validate();
  const Interior in = checkedInterior(img, params.spec);
  const int P = params.spec.points;
  const std::string name(variantName(params.variant));

  if (params.variant == Variant::Clbp) return computeClbp(img, params, in);

  NeighborSampler sampler(img, params.spec, effectiveMode(params));

  if (params.variant == Variant::Ltp) {
    LabelMap upper = emptyMap(in.width, in.height, 1U << P, "ltp.upper");
    LabelMap lower = emptyMap(in.width, in.height, 1U << P, "ltp.lower");
    const double t = params.tolerance;
    for (int y = 0; y < in.height; ++y) {
      for (int x = 0; x < in.width; ++x) {
        const int cx = x + in.margin;
        const int cy = y + in.margin;
        const auto code = ltpCodes(img(cx, cy), sampler.sample(cx, cy), t);
        const std::size_t i = static_cast<std::size_t>(y) * in.width + x;
        upper.labels[i] = code.upper.value;
        lower.labels[i] = code.lower.value;
      }
    }
    std::vector<LabelMap> maps;
    maps.push_back(std::move(upper));
    maps.push_back(std::move(lower));
    return maps;
  }

  LabelMap out = emptyMap(in.width, in.height, labelSpace(params), name);
  using Neighbors = std::span<const double>;
  switch (params.variant) {
    case Variant::Classic:
    case Variant::Circ:
    case Variant::Dom:
      fillMap(img, in, sampler, out, [](double c, Neighbors nb) {
        return lbpCode(c, nb).value;
      });
      break;
    case Variant::Min:
    case Variant::MinInterp: {
      const auto& rank = canonicalRankTable(P);
      fillMap(img, in, sampler, out, [&rank](double c, Neighbors nb) {
        return rank[lbpCode(c, nb).value];
      });
      break;
    }
    case Variant::Uni:
      fillMap(img, in, sampler, out, [](double c, Neighbors nb) {
        return uniformLabel(lbpCode(c, nb));
      });
      break;
    case Variant::Num:
      fillMap(img, in, sampler, out, [](double c, Neighbors nb) {
        return numLabel(lbpCode(c, nb));
      });
      break;
    case Variant::Ni:
      if (params.niRotationInvariant) {
        const auto& rank = canonicalRankTable(P);
        fillMap(img, in, sampler, out, [&rank](double, Neighbors nb) {
          return rank[niCode(nb).value];
        });
      } else {
        fillMap(img, in, sampler, out,
                [](double, Neighbors nb) { return niCode(nb).value; });
      }
      break;
    case Variant::Med:
      fillMap(img, in, sampler, out,
              [](double c, Neighbors nb) { return medLabel(c, nb); });
      break;
    case Variant::Cen: {
      const double threshold = params.cenThreshold;
      fillMap(img, in, sampler, out, [threshold](double c, Neighbors nb) {
        return cenCode(c, nb, threshold);
      });
      break;
    }
    case Variant::Ltp:
    case Variant::Clbp:
      break;
  }
  std::vector<LabelMap> maps;
  maps.push_back(std::move(out));
  return maps;
}

LabelMap computeLabelMap(const GrayImage& img, const VariantParams& params) {
  if (params.variant == Variant::Ltp || params.variant == Variant::Clbp) {
    throw ArgumentError(std::string(variantName(params.variant)) +
                        " produces several label maps");
  }
  return std::move(computeLabelMaps(img, params).front());
}

ContrastMap computeContrastMap(const GrayImage& img,
                               const NeighborhoodSpec& spec) {
  const Interior in = checkedInterior(img, spec);
  NeighborSampler sampler(img, spec, spec.mode);
  ContrastMap out;
  out.width = in.width;
  out.height = in.height;
  out.values.resize(static_cast<std::size_t>(in.width) * in.height);
  for (int y = 0; y < in.height; ++y) {
    for (int x = 0; x < in.width; ++x) {
      const int cx = x + in.margin;
      const int cy = y + in.margin;
      out.values[static_cast<std::size_t>(y) * in.width + x] =
          contrastCi(img(cx, cy), sampler.sample(cx, cy));
    }
  }
  return out;
}

}  // namespace lbptex
