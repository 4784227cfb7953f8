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

#include "maskgen/tv_denoise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maskgen {

namespace {

void require_same_size(const RealField& a, const RealField& b) {
    if (a.width != b.width || a.height != b.height) {
        throw DimensionMismatch(a.width, a.height, b.width, b.height);
    }
}

double smoothed_sum(const RealField& f, double eps2) {
    const int w = f.width;
    const int h = f.height;
    double total = 0.0;
    for (int y = 0; y < h; ++y) {
        const double* row = &f.data[static_cast<std::size_t>(y) * w];
        const double* below = y + 1 < h ? row + w : nullptr;
        for (int x = 0; x < w; ++x) {
            const double dx = x + 1 < w ? row[x + 1] - row[x] : 0.0;
            const double dy = below ? below[x] - row[x] : 0.0;
            total += std::sqrt(dx * dx + dy * dy + eps2);
        }
    }
    return total;
}

double fidelity_sum(const RealField& f, const RealField& ref) {
    double total = 0.0;
    for (std::size_t i = 0; i < f.data.size(); ++i) {
        const double d = f.data[i] - ref.data[i];
        total += d * d;
    }
    return total;
}

// Writes the gradient into grad. own/nx/ny are scratch buffers of field size:
// nx, ny hold the normalized forward differences dx/t and dy/t, own holds the
// cell's own term (-dx - dy)/t.
void gradient_into(const RealField& field, const RealField& reference, double lambda, double eps,
                   std::vector<double>& own, std::vector<double>& nx, std::vector<double>& ny,
                   RealField& grad) {
    const int w = field.width;
    const int h = field.height;
    const double eps2 = eps * eps;

    for (int y = 0; y < h; ++y) {
        const std::size_t base = static_cast<std::size_t>(y) * w;
        const double* row = &field.data[base];
        const double* below = y + 1 < h ? row + w : nullptr;
        for (int x = 0; x < w; ++x) {
            const double dx = x + 1 < w ? row[x + 1] - row[x] : 0.0;
            const double dy = below ? below[x] - row[x] : 0.0;
            const double t = std::sqrt(dx * dx + dy * dy + eps2);
            own[base + x] = (-dx - dy) / t;
            nx[base + x] = dx / t;
            ny[base + x] = dy / t;
        }
    }
    for (int y = 0; y < h; ++y) {
        const std::size_t base = static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            const std::size_t i = base + x;
            double g = own[i];
            if (x > 0) g += nx[i - 1];
            if (y > 0) g += ny[i - w];
            g += lambda * (field.data[i] - reference.data[i]);
            grad.data[i] = g;
        }
    }
}

} // namespace

RealField::RealField(int w, int h, double fill) : width(w), height(h) {
    if (w < 1 || h < 1) throw std::invalid_argument("field dimensions must be at least 1x1");
    data.assign(static_cast<std::size_t>(w) * h, fill);
}

RealField to_field(const GrayImage& img) {
    RealField f(img.width, img.height);
    std::copy(img.data.begin(), img.data.end(), f.data.begin());
    return f;
}

GrayImage quantize(const RealField& field) {
    GrayImage img(field.width, field.height);
    for (std::size_t i = 0; i < field.data.size(); ++i) {
        img.data[i] = static_cast<std::uint8_t>(std::clamp(std::lround(field.data[i]), 0L, 255L));
    }
    return img;
}

double tv_energy(const RealField& field) {
    return smoothed_sum(field, 0.0);
}

double tv_energy_smoothed(const RealField& field, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    return smoothed_sum(field, epsilon * epsilon);
}

double tv_objective(const RealField& field, const RealField& reference, double fidelity_weight) {
    require_same_size(field, reference);
    return tv_energy(field) + 0.5 * fidelity_weight * fidelity_sum(field, reference);
}

double tv_objective_smoothed(const RealField& field, const RealField& reference,
                             double fidelity_weight, double epsilon) {
    require_same_size(field, reference);
    return tv_energy_smoothed(field, epsilon) + 0.5 * fidelity_weight * fidelity_sum(field, reference);
}

RealField tv_gradient(const RealField& field, const RealField& reference, double fidelity_weight,
                      double epsilon) {
    require_same_size(field, reference);
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");

    const std::size_t n = field.data.size();
    std::vector<double> own(n), nx(n), ny(n);
    RealField grad(field.width, field.height);
    gradient_into(field, reference, fidelity_weight, epsilon, own, nx, ny, grad);
    return grad;
}

GrayImage tv_denoise(const GrayImage& img, const DenoiseParams& params, const DenoiseObserver& observer) {
    if (params.iterations < 0) throw std::invalid_argument("iterations must be >= 0");
    if (!(params.step > 0.0)) throw std::invalid_argument("step must be positive");
    if (params.fidelity_weight < 0.0) throw std::invalid_argument("fidelity_weight must be >= 0");
    if (!(params.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");

    if (params.iterations == 0) return img;

    const RealField reference = to_field(img);
    RealField y = reference;
    RealField grad(img.width, img.height);
    const std::size_t n = y.data.size();
    std::vector<double> own(n), nx(n), ny(n);

    for (int it = 1; it <= params.iterations; ++it) {
        gradient_into(y, reference, params.fidelity_weight, params.epsilon, own, nx, ny, grad);
        for (std::size_t i = 0; i < n; ++i) {
            y.data[i] -= params.step * grad.data[i];
        }
        if (observer) observer(it, y);
    }
    return quantize(y);
}

} // namespace maskgen
