// Copyright 2026 The qecgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qecgate/states.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "qecgate/errors.h"

namespace qecgate {

ComplexVector schmidt_form(double theta) {
    return ComplexVector{std::sin(theta), 0.0, 0.0, std::cos(theta)};
}

SchmidtState schmidt_decompose(const ComplexVector &amps, const Tolerances &tol) {
    if (amps.dim() != 4) {
        throw DomainError("two-qubit state needs 4 amplitudes, got " + std::to_string(amps.dim()));
    }
    double n = amps.norm();
    if (!(std::abs(n - 1) <= tol.input_norm)) {
        throw DomainError("state is not normalized (norm = " + std::to_string(n) + ")");
    }
    ComplexVector psi = amps.scaled(1.0 / n);

    // psi = sum_ab C[a][b] |a>|b> = sum_k s_k (u_k) ⊗ (conj v_k).
    ComplexMatrix coeffs{{psi[0], psi[1]}, {psi[2], psi[3]}};
    Svd2x2 svd = svd2x2(coeffs);

    SchmidtState out;
    out.theta = std::atan2(svd.singular[1], svd.singular[0]);
    // |1> carries the larger coefficient cos(theta), |0> the smaller one.
    out.frame_a = ComplexMatrix{{svd.u(0, 1), svd.u(0, 0)}, {svd.u(1, 1), svd.u(1, 0)}};
    out.frame_b = ComplexMatrix{
        {std::conj(svd.v(0, 1)), std::conj(svd.v(0, 0))},
        {std::conj(svd.v(1, 1)), std::conj(svd.v(1, 0))},
    };
    return out;
}

ComplexVector reconstruct(const SchmidtState &s) {
    return apply(tensor(s.frame_a, s.frame_b), schmidt_form(s.theta));
}

EntanglementValue entanglement(double theta) {
    if (!(theta >= 0 && theta <= std::numbers::pi / 2)) {
        throw DomainError("entanglement angle must lie in [0, pi/2], got " + std::to_string(theta));
    }
    auto h = [](double p) {
        return p > 0 ? -p * std::log2(p) : 0.0;
    };
    double c = std::cos(theta);
    double s = std::sin(theta);
    return {h(c * c) + h(s * s)};
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_real(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double value = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
        throw DomainError("malformed complex number '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) {
        throw DomainError("empty complex number");
    }
    if (s.back() != 'j' && s.back() != 'i') {
        return {parse_real(s, text), 0.0};
    }
    s.remove_suffix(1);
    // Split at the last sign that is not the leading sign or part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) {
        std::string_view imag = s;
        if (imag.empty() || imag == "+" || imag == "-") {
            return {0.0, imag == "-" ? -1.0 : 1.0};
        }
        return {0.0, parse_real(imag, text)};
    }
    double re = parse_real(s.substr(0, split), text);
    std::string_view imag = s.substr(split);
    double im = (imag == "+" || imag == "-") ? (imag == "-" ? -1.0 : 1.0) : parse_real(imag, text);
    return {re, im};
}

ComplexVector parse_amplitudes(std::string_view text) {
    std::vector<Complex> values;
    while (true) {
        std::size_t comma = text.find(',');
        values.push_back(parse_complex(text.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    if (values.size() != 4) {
        throw DomainError("expected 4 comma separated amplitudes, got " + std::to_string(values.size()));
    }
    return ComplexVector(std::move(values));
}

}  // namespace qecgate
