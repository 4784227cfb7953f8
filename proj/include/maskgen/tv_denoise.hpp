// Copyright 2026 The maskgen Authors
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

#ifndef MASKGEN_TV_DENOISE_HPP
#define MASKGEN_TV_DENOISE_HPP

#include "maskgen/image.hpp"

#include <functional>
#include <vector>

namespace maskgen {

/// Real-valued working grid for the descent loop. Row-major like GrayImage;
/// quantization back to 8 bits happens only once, after the last iteration.
struct RealField {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    RealField() = default;
    RealField(int w, int h, double fill = 0.0);

    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
};

/// Parameters of the explicit gradient descent on the total-variation
/// objective. step must stay <= 0.25 for the explicit scheme to be stable
/// (the smoothed TV gradient is 8/epsilon-Lipschitz on the 4-neighbor grid).
struct DenoiseParams {
    int iterations = 100;          // descent steps
    double step = 0.125;           // tau
    double fidelity_weight = 0.03; // lambda
    double epsilon = 1.0;          // gradient smoothing, intensity units
};

RealField to_field(const GrayImage& img);

/// Round half away from zero, clamp to [0, 255].
GrayImage quantize(const RealField& field);

/// Discrete total variation with forward differences:
///   V(y) = sum_{x,y} sqrt(dx^2 + dy^2),
/// where dx = y(x+1,y) - y(x,y) and dy = y(x,y+1) - y(x,y), and differences
/// that would cross the image boundary are 0.
double tv_energy(const RealField& field);

/// Smoothed variant: sum_{x,y} sqrt(dx^2 + dy^2 + epsilon^2). Converges to
/// tv_energy from above as epsilon -> 0; the descent loop minimizes this.
double tv_energy_smoothed(const RealField& field, double epsilon);

/// tv_energy(field) + (lambda/2) * sum (field - reference)^2.
double tv_objective(const RealField& field, const RealField& reference, double fidelity_weight);

/// Smoothed objective actually minimized by the descent loop.
double tv_objective_smoothed(const RealField& field, const RealField& reference,
                             double fidelity_weight, double epsilon);

/// Analytic gradient of tv_objective_smoothed. Per cell p = (x, y), with
/// t = sqrt(dx^2 + dy^2 + eps^2) evaluated at a cell:
///
///   g(p) = (-dx(p) - dy(p)) / t(p)
///        + (x > 0 ? dx(x-1, y) / t(x-1, y) : 0)
///        + (y > 0 ? dy(x, y-1) / t(x, y-1) : 0)
///        + lambda * (field(p) - reference(p))
///
/// summed left to right in exactly that order, so results are reproducible
/// bit for bit. Each forward difference contributes to its two incident
/// cells; the first three terms together are the (negated) discrete
/// divergence of the normalized gradient field.
RealField tv_gradient(const RealField& field, const RealField& reference, double fidelity_weight,
                      double epsilon);

/// Called after each descent step with the 1-based iteration index and the
/// current real-valued iterate.
using DenoiseObserver = std::function<void(int iteration, const RealField&)>;

/// Gradient descent on the smoothed objective: y <- y - tau * g(y), run for
/// params.iterations steps with reference = input, then quantized back to
/// 8-bit. iterations = 0 returns the input unchanged.
GrayImage tv_denoise(const GrayImage& img, const DenoiseParams& params,
                     const DenoiseObserver& observer = {});

} // namespace maskgen

#endif // MASKGEN_TV_DENOISE_HPP
