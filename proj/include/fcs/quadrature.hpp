/**
 * Copyright 2026 The fcstrain Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FCS_QUADRATURE_HPP
#define FCS_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <queue>
#include <span>
#include <vector>

namespace fcs {

struct QuadratureOptions {
    /// Absolute tolerance on the summed error estimate, per integrand component.
    double abs_tol = 1e-10;
    std::size_t max_panels = 400000;
};

struct QuadratureResult {
    std::vector<std::complex<double>> values;
    /// Summed Gauss-Kronrod error estimate (component-wise maximum per panel).
    double error = 0.0;
    /// Summed error estimate of each component.
    std::vector<double> component_errors;
    std::size_t panels = 0;
    std::size_t evaluations = 0;
    bool converged = false;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod abscissae and weights on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kKronrodNodes[1], [3], [5], [7].
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double error;
    std::vector<std::complex<double>> value;
    std::vector<double> component_error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_panel(F& f, std::size_t components, double a, double b,
                          std::vector<std::complex<double>>& scratch) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::vector<std::complex<double>> kronrod(components), gauss(components);
    scratch.resize(components);

    auto accumulate = [&](double x, double wk, double wg) {
        f(x, std::span<std::complex<double>>(scratch));
        for (std::size_t c = 0; c < components; ++c) {
            kronrod[c] += wk * scratch[c];
            if (wg != 0.0) gauss[c] += wg * scratch[c];
        }
    };

    accumulate(center, kKronrodWeights[7], kGaussWeights[3]);
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double wg = (j % 2 == 1) ? kGaussWeights[j / 2] : 0.0;
        accumulate(center - dx, kKronrodWeights[j], wg);
        accumulate(center + dx, kKronrodWeights[j], wg);
    }

    Panel panel{a, b, 0.0, std::move(kronrod), std::vector<double>(components)};
    for (std::size_t c = 0; c < components; ++c) {
        panel.value[c] *= half;
        panel.component_error[c] = std::abs(panel.value[c] - half * gauss[c]);
        panel.error = std::max(panel.error, panel.component_error[c]);
    }
    return panel;
}

}  // namespace detail

/**
 * Globally adaptive Gauss-Kronrod (7/15) integration of a vector-valued
 * complex integrand over the consecutive intervals of `breakpoints`.
 *
 * `f(x, out)` fills `out` (size `components`) with the integrand at x. Every
 * component shares the same nodes, so Gram-type integrands stay exactly
 * Hermitian and positive semidefinite under the quadrature. The panel with
 * the largest error estimate is bisected until the summed estimate drops
 * below `abs_tol` or the panel budget runs out (then `converged` is false).
 */
template <class F>
QuadratureResult integrate(F&& f, std::size_t components, std::span<const double> breakpoints,
                           const QuadratureOptions& options = {}) {
    QuadratureResult result;
    result.values.assign(components, {0.0, 0.0});
    result.component_errors.assign(components, 0.0);
    if (breakpoints.size() < 2) {
        result.converged = true;
        return result;
    }

    std::vector<std::complex<double>> scratch;
    std::priority_queue<detail::Panel> queue;
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i + 1] > breakpoints[i])) continue;
        auto panel = detail::gauss_kronrod_panel(f, components, breakpoints[i], breakpoints[i + 1], scratch);
        total_error += panel.error;
        queue.push(std::move(panel));
    }
    result.evaluations = 15 * queue.size();

    const double min_width = 1e-13 * std::max(1.0, std::abs(breakpoints.back() - breakpoints.front()));
    std::vector<detail::Panel> finished;
    while (total_error > options.abs_tol && !queue.empty()) {
        if (queue.size() + finished.size() >= options.max_panels) break;
        detail::Panel worst = queue.top();
        queue.pop();
        if (worst.b - worst.a < min_width) {
            // Unrefinable; its error stays in the total.
            finished.push_back(std::move(worst));
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        auto left = detail::gauss_kronrod_panel(f, components, worst.a, mid, scratch);
        auto right = detail::gauss_kronrod_panel(f, components, mid, worst.b, scratch);
        result.evaluations += 30;
        total_error += left.error + right.error - worst.error;
        queue.push(std::move(left));
        queue.push(std::move(right));
    }

    // Recompute the error sum from scratch to shed drift from the running update.
    result.error = 0.0;
    result.component_errors.assign(components, 0.0);
    auto absorb = [&](const detail::Panel& panel) {
        for (std::size_t c = 0; c < components; ++c) {
            result.values[c] += panel.value[c];
            result.component_errors[c] += panel.component_error[c];
        }
        result.error += panel.error;
    };
    result.panels = queue.size() + finished.size();
    for (const auto& panel : finished) absorb(panel);
    while (!queue.empty()) {
        absorb(queue.top());
        queue.pop();
    }
    result.converged = result.error <= options.abs_tol;
    return result;
}

/**
 * Splits [lo, hi] into initial panels. Every point of `forced` inside the
 * interval becomes a panel boundary; elsewhere a panel starting at x is no
 * wider than `max_width(x)`. `max_width` should shrink toward features so
 * that the march approaches them geometrically.
 */
std::vector<double> plan_panels(double lo, double hi, std::vector<double> forced,
                                const std::function<double(double)>& max_width,
                                std::size_t max_panels = 200000);

}  // namespace fcs

#endif
