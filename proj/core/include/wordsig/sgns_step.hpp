#pragma once

#include "wordsig/errors.hpp"
#include "wordsig/matrix.hpp"
#include "wordsig/vocabulary.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <span>
#include <string>

namespace wordsig {

/// Inner product with eight partial sums so the loop vectorizes without
/// reassociation flags. Summation order is fixed, so results are reproducible.
template <std::floating_point Real>
Real dot(std::span<Real const> a, std::span<Real const> b) noexcept
{
  Real        acc[8] = {};
  std::size_t i      = 0;
  std::size_t const n = a.size();
  for (; i + 8 <= n; i += 8)
  {
    for (std::size_t k = 0; k < 8; ++k)
    {
      acc[k] += a[i + k] * b[i + k];
    }
  }
  Real tail = 0;
  for (; i < n; ++i)
  {
    tail += a[i] * b[i];
  }
  return ((acc[0] + acc[4]) + (acc[1] + acc[5])) + ((acc[2] + acc[6]) + (acc[3] + acc[7])) + tail;
}

/// -log(sigmoid(z)), stable for large |z|.
template <std::floating_point Real>
Real log_sigmoid_loss(Real z) noexcept
{
  return z > 0 ? std::log1p(std::exp(-z)) : -z + std::log1p(std::exp(z));
}

/// One skip-gram negative-sampling update for the pair (center, context).
///
/// For the positive context (label 1) and every negative (label 0):
///   s = sigmoid(output[x] . input[center]),  g = alpha * (label - s)
///   output[x] += g * input[center];  acc += g * output[x] (before the update)
/// and finally input[center] += acc. `scratch` must hold `input.cols()`
/// values. With distinct targets the update equals -alpha times the gradient
/// of  -log s(output[context].w) - sum_i log s(-output[n_i].w).
///
/// Returns that one-step objective, evaluated before the update, when
/// `kTrackLoss` is set and 0 otherwise. A non-finite activation throws
/// TrainingError.
template <bool kTrackLoss = false, std::floating_point Real, class Sigmoid>
Real sgns_step(Matrix<Real> &input, Matrix<Real> &output, TermIndex center, TermIndex context,
               std::span<TermIndex const> negatives, Real alpha, Sigmoid const &sigmoid,
               std::span<Real> scratch)
{
  auto const w   = input.row(center);
  auto const acc = scratch.first(w.size());
  std::fill(acc.begin(), acc.end(), Real{0});
  Real loss = 0;

  auto update = [&](TermIndex target, Real label) {
    auto const o = output.row(target);
    Real const z = dot<Real>(o, w);
    if (!std::isfinite(z))
    {
      throw TrainingError("non-finite activation for center index " + std::to_string(center) +
                          ", target index " + std::to_string(target));
    }
    if constexpr (kTrackLoss)
    {
      loss += label > 0 ? log_sigmoid_loss(z) : log_sigmoid_loss(-z);
    }
    Real const g = alpha * (label - sigmoid(z));
    for (std::size_t k = 0; k < w.size(); ++k)
    {
      acc[k] += g * o[k];
    }
    for (std::size_t k = 0; k < w.size(); ++k)
    {
      o[k] += g * w[k];
    }
  };

  update(context, Real{1});
  for (TermIndex const n : negatives)
  {
    update(n, Real{0});
  }
  for (std::size_t k = 0; k < w.size(); ++k)
  {
    w[k] += acc[k];
  }
  return loss;
}

}  // namespace wordsig
