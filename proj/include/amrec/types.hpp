// Copyright 2026 The amrec authors
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
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace amrec {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
// Embedding tables and feature matrices are accessed row-wise.
using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Rng = std::mt19937_64;

// Malformed or inconsistent input data (exit code 2 at the CLI).
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& message)
      : std::runtime_error(message) {}
};

// Non-finite values or other numeric breakdown mid-run (exit code 3).
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& message)
      : std::runtime_error(message) {}
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a base seed and a stream tag.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream));
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(mix_seed(seed, stream));
}

// Stream tags so that the RNG consumers never overlap.
namespace rng_stream {
constexpr std::uint64_t kInit = 0x101;
constexpr std::uint64_t kSplit = 0x102;
constexpr std::uint64_t kTrain = 0x103;
constexpr std::uint64_t kValidationNegatives = 0x104;
constexpr std::uint64_t kEvalNegatives = 0x105;
constexpr std::uint64_t kAttack = 0x106;
constexpr std::uint64_t kSynthUsers = 0x107;
constexpr std::uint64_t kSynthItems = 0x108;
constexpr std::uint64_t kSynthProjection = 0x109;
constexpr std::uint64_t kSynthNoise = 0x10a;
constexpr std::uint64_t kStageInit = 0x10b;
}  // namespace rng_stream

struct HyperParams {
  int K = 64;               // embedding size
  double epsilon = 0.0;     // adversary budget (L2 norm on each Delta_i)
  double lambda = 0.0;      // adversarial regularizer weight
  double beta = 0.0;        // L2 regularizer weight
  double eta = 0.05;        // learning rate
  int batch_size = 512;
  int epochs = 100;
  std::uint64_t seed = 42;

  void validate() const {
    if (K < 1) throw std::invalid_argument("K must be >= 1");
    if (epsilon < 0) throw std::invalid_argument("epsilon must be >= 0");
    if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
    if (beta < 0) throw std::invalid_argument("beta must be >= 0");
    if (eta <= 0) throw std::invalid_argument("eta must be > 0");
    if (batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");
    if (epochs < 0) throw std::invalid_argument("epochs must be >= 0");
  }
};

}  // namespace amrec
