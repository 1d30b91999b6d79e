// Copyright 2026 The cavity-dj Authors
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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "cavitydj/random.hpp"
#include "cavitydj_cli/cli.hpp"

namespace cavitydj::cli {

namespace {

using nlohmann::ordered_json;

std::string format_double(double v) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument("report contains a non-finite number");
    }
    const double r = std::round(v);
    if (std::abs(v - r) <= 1e-14) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f", r == 0.0 ? 0.0 : r);
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit(const ordered_json &j, std::string &out, int depth) {
    const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
    const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
    switch (j.type()) {
    case ordered_json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) {
                out += ",\n";
            }
            first = false;
            out += pad + ordered_json(it.key()).dump() + ": ";
            emit(it.value(), out, depth + 1);
        }
        out += "\n" + close_pad + "}";
        return;
    }
    case ordered_json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) {
                out += ",\n";
            }
            out += pad;
            emit(j[i], out, depth + 1);
        }
        out += "\n" + close_pad + "]";
        return;
    }
    case ordered_json::value_t::number_float:
        out += format_double(j.get<double>());
        return;
    default:
        out += j.dump();
        return;
    }
}

void flatten(const ordered_json &j, const std::string &prefix, std::string &out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
        return;
    }
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], prefix + "." + std::to_string(i), out);
        }
        return;
    }
    out += prefix + ",";
    if (j.is_number_float()) {
        out += format_double(j.get<double>());
    } else if (j.is_string()) {
        out += j.get<std::string>();
    } else {
        out += j.dump();
    }
    out += "\n";
}

}  // namespace

std::string write_json(const ordered_json &report) {
    std::string out;
    emit(report, out, 0);
    out += "\n";
    return out;
}

std::string write_csv(const ordered_json &report) {
    std::string out = "key,value\n";
    flatten(report, "", out);
    return out;
}

std::vector<std::size_t> sample_counts(const std::vector<double> &distribution,
                                       std::uint64_t seed, std::size_t shots) {
    std::vector<std::size_t> counts(distribution.size(), 0);
    double total = 0.0;
    for (double p : distribution) {
        total += p;
    }
    for (std::size_t s = 0; s < shots; ++s) {
        std::mt19937_64 rng(derive_seed(seed, s));
        const double u = uniform_unit(rng) * total;
        double acc = 0.0;
        std::size_t pick = distribution.size() - 1;
        for (std::size_t x = 0; x < distribution.size(); ++x) {
            acc += distribution[x];
            if (u < acc) {
                pick = x;
                break;
            }
        }
        while (distribution[pick] == 0.0 && pick > 0) {
            --pick;
        }
        ++counts[pick];
    }
    return counts;
}

double parse_angle(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("invalid angle '" + std::string(text) + "'"); };
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty()) {
        throw bad();
    }
    const std::size_t pi_pos = s.find("pi");
    if (pi_pos == std::string_view::npos) {
        double v = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
            throw bad();
        }
        return v;
    }
    std::string_view coeff = s.substr(0, pi_pos);
    std::string_view rest = s.substr(pi_pos + 2);
    double k = 1.0;
    if (coeff == "-") {
        k = -1.0;
    } else if (!coeff.empty() && coeff != "+") {
        if (coeff.front() == '+') coeff.remove_prefix(1);
        if (!coeff.empty() && coeff.back() == '*') coeff.remove_suffix(1);
        const auto res = std::from_chars(coeff.data(), coeff.data() + coeff.size(), k);
        if (res.ec != std::errc{} || res.ptr != coeff.data() + coeff.size()) {
            throw bad();
        }
    }
    double denom = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw bad();
        }
        rest.remove_prefix(1);
        const auto res = std::from_chars(rest.data(), rest.data() + rest.size(), denom);
        if (res.ec != std::errc{} || res.ptr != rest.data() + rest.size() || denom == 0.0) {
            throw bad();
        }
    }
    return k * std::numbers::pi / denom;
}

}  // namespace cavitydj::cli
