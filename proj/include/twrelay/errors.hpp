// SPDX-License-Identifier: Apache-2.0
//
// twrelay - two-way relay channel estimation simulator

#pragma once

#include <stdexcept>
#include <string>

namespace twrelay {

// Numerical model assumptions broken at runtime (degenerate estimate,
// non-PSD effective noise covariance, rank-deficient training).
struct model_error : std::runtime_error {
    explicit model_error(const std::string& what) : std::runtime_error(what) {}
};

// Iterative solver did not reach its tolerance within the iteration cap.
struct solver_error : std::runtime_error {
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

// File/stream failures carrying the offending path.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace twrelay
