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

#include "fcs/config.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fcs/errors.hpp"

namespace fcs {

using nlohmann::json;

namespace {

const std::vector<std::string> kRequiredKeys = {"particles", "packet", "barrier"};

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) out += ", ";
        out += item;
    }
    return out;
}

void reject_unknown(const json& object, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!object.is_object()) throw ParseError(path, "expected an object");
    for (const auto& [key, value] : object.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
        if (!known) throw ParseError(path.empty() ? key : path + "." + key, "unknown key");
    }
}

double number_at(const json& object, const std::string& key, const std::string& path) {
    const auto& value = object.at(key);
    if (!value.is_number()) throw ParseError(path + key, "expected a number");
    return value.get<double>();
}

std::size_t count_at(const json& value, const std::string& path) {
    if (!value.is_number_integer()) throw ParseError(path, "expected an integer");
    const auto n = value.get<long long>();
    if (n < 1) throw ValidationError(path + ": must be at least 1 (got " + std::to_string(n) + ")");
    return static_cast<std::size_t>(n);
}

AmplitudeFamily parse_packet(const json& node) {
    if (!node.is_object()) throw ParseError("packet", "expected an object");
    const auto type = node.value("type", std::string("gaussian"));
    if (type == "gaussian") {
        reject_unknown(node, "packet", {"type", "p0_sigma"});
        if (!node.contains("p0_sigma")) throw ParseError("packet.p0_sigma", "required key missing");
        const double p0_sigma = number_at(node, "p0_sigma", "packet.");
        if (!(p0_sigma > 0.0)) throw ValidationError("packet.p0_sigma: must be positive");
        return GaussianAmplitude{1.0, p0_sigma};
    }
    if (type == "tabulated") {
        reject_unknown(node, "packet", {"type", "samples"});
        if (!node.contains("samples") || !node.at("samples").is_array()) {
            throw ParseError("packet.samples", "expected an array of [p, re, im] triples");
        }
        TabulatedAmplitude table;
        std::size_t i = 0;
        for (const auto& sample : node.at("samples")) {
            const std::string path = "packet.samples[" + std::to_string(i++) + "]";
            if (!sample.is_array() || sample.size() != 3 ||
                !std::all_of(sample.begin(), sample.end(), [](const json& v) { return v.is_number(); })) {
                throw ParseError(path, "expected [p, re, im]");
            }
            table.momenta.push_back(sample[0].get<double>());
            table.values.emplace_back(sample[1].get<double>(), sample[2].get<double>());
        }
        AmplitudeFamily family = std::move(table);
        validate(family);
        return family;
    }
    throw ParseError("packet.type", "expected \"gaussian\" or \"tabulated\"");
}

BarrierModel parse_barrier(const json& node) {
    reject_unknown(node, "barrier", {"resonances", "clamp_to_unity"});
    if (!node.contains("resonances") || !node.at("resonances").is_array()) {
        throw ParseError("barrier.resonances", "expected an array");
    }
    std::vector<Resonance> levels;
    std::size_t i = 0;
    for (const auto& level : node.at("resonances")) {
        const std::string path = "barrier.resonances[" + std::to_string(i++) + "]";
        reject_unknown(level, path, {"energy", "width"});
        for (const char* key : {"energy", "width"}) {
            if (!level.contains(key)) throw ParseError(path + "." + key, "required key missing");
        }
        levels.push_back({number_at(level, "energy", path + "."), number_at(level, "width", path + ".")});
    }
    bool clamp = true;
    if (node.contains("clamp_to_unity")) {
        if (!node.at("clamp_to_unity").is_boolean()) throw ParseError("barrier.clamp_to_unity", "expected a boolean");
        clamp = node.at("clamp_to_unity").get<bool>();
    }
    return BarrierModel(std::move(levels), clamp);
}

SpacingMode parse_spacing(const json& node) {
    if (node.is_string()) {
        if (node.get<std::string>() == "equal") return EqualSpacing{};
        throw ParseError("spacing", "expected \"equal\" or {\"explicit\": [...]}");
    }
    reject_unknown(node, "spacing", {"explicit"});
    if (!node.contains("explicit") || !node.at("explicit").is_array()) {
        throw ParseError("spacing.explicit", "expected an array of emission times");
    }
    ExplicitSpacing spacing;
    for (const auto& t : node.at("explicit")) {
        if (!t.is_number()) throw ParseError("spacing.explicit", "expected numbers");
        spacing.pattern.push_back(t.get<double>());
    }
    return spacing;
}

GridSpec parse_grid(const json& node, GridSpec grid) {
    reject_unknown(node, "grid", {"start", "stop", "points"});
    if (node.contains("start")) grid.start = number_at(node, "start", "grid.");
    if (node.contains("stop")) grid.stop = number_at(node, "stop", "grid.");
    if (node.contains("points")) grid.points = count_at(node.at("points"), "grid.points");
    if (!(grid.start >= 0.0)) throw ValidationError("grid.start: must be >= 0");
    if (grid.points > 1 && !(grid.stop > grid.start)) throw ValidationError("grid.stop: must exceed grid.start");
    return grid;
}

std::vector<ExchangeStatistics> parse_statistics_list(const json& node) {
    if (!node.is_array() || node.empty()) throw ParseError("statistics", "expected a non-empty array");
    std::vector<ExchangeStatistics> out;
    for (const auto& item : node) {
        const auto parsed = item.is_string() ? parse_statistics(item.get<std::string>()) : std::nullopt;
        if (!parsed) throw ParseError("statistics", "expected boson, fermion or distinguishable");
        if (std::find(out.begin(), out.end(), *parsed) != out.end()) {
            throw ValidationError("statistics: duplicate entry " + std::string(to_string(*parsed)));
        }
        out.push_back(*parsed);
    }
    return out;
}

Tolerances parse_tolerance(const json& node, Tolerances tolerance) {
    reject_unknown(node, "tolerance", {"quadrature", "singular"});
    if (node.contains("quadrature")) tolerance.quadrature = number_at(node, "quadrature", "tolerance.");
    if (node.contains("singular")) tolerance.singular = number_at(node, "singular", "tolerance.");
    if (!(tolerance.quadrature > 0.0)) throw ValidationError("tolerance.quadrature: must be positive");
    if (!(tolerance.singular >= 0.0)) throw ValidationError("tolerance.singular: must be non-negative");
    return tolerance;
}

}  // namespace

RunConfig preset_config(std::string_view name) {
    const auto preset = figure_preset(name);
    if (!preset) throw ValidationError("unknown figure preset '" + std::string(name) + "'");
    RunConfig config;
    config.preset = preset->name;
    config.train = preset->train;
    config.grid = preset->grid;
    config.particle_counts = preset->particle_counts;
    config.train.n_particles = config.particle_counts.front();
    return config;
}

RunConfig config_from_json(const json& document) {
    if (!document.is_object()) throw ParseError("", "expected a JSON object");
    reject_unknown(document, "", {"preset", "particles", "packet", "barrier", "spacing", "grid", "statistics",
                                  "tolerance", "output"});

    RunConfig config;
    if (document.contains("preset")) {
        if (!document.at("preset").is_string()) throw ParseError("preset", "expected a string");
        config = preset_config(document.at("preset").get<std::string>());
    } else {
        std::vector<std::string> missing;
        for (const auto& key : kRequiredKeys) {
            if (!document.contains(key)) missing.push_back(key);
        }
        if (!missing.empty()) throw ParseError("", "missing required keys: " + join(missing));
    }

    if (document.contains("particles")) {
        const auto& node = document.at("particles");
        config.particle_counts.clear();
        if (node.is_array()) {
            if (node.empty()) throw ParseError("particles", "expected a non-empty list");
            for (std::size_t i = 0; i < node.size(); ++i) {
                config.particle_counts.push_back(count_at(node[i], "particles[" + std::to_string(i) + "]"));
            }
        } else {
            config.particle_counts.push_back(count_at(node, "particles"));
        }
        config.train.n_particles = config.particle_counts.front();
    }
    if (document.contains("packet")) config.train.packet = parse_packet(document.at("packet"));
    if (document.contains("barrier")) config.train.barrier = parse_barrier(document.at("barrier"));
    if (document.contains("spacing")) config.train.spacing = parse_spacing(document.at("spacing"));
    if (document.contains("grid")) config.grid = parse_grid(document.at("grid"), config.grid);
    if (document.contains("statistics")) config.train.statistics = parse_statistics_list(document.at("statistics"));
    if (document.contains("tolerance")) config.tolerance = parse_tolerance(document.at("tolerance"), config.tolerance);
    if (document.contains("output")) {
        if (!document.at("output").is_string()) throw ParseError("output", "expected a string");
        config.output = document.at("output").get<std::string>();
    }
    if (config.particle_counts.empty()) config.particle_counts = {config.train.n_particles};

    validate(config.train);
    return config;
}

RunConfig parse_config(std::string_view text) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        throw ParseError("", "empty document; missing required keys: " + join(kRequiredKeys));
    }
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("malformed JSON: ") + e.what());
    }
    return config_from_json(document);
}

json to_json(const RunConfig& config) {
    json document;
    if (!config.preset.empty()) document["preset"] = config.preset;
    if (config.particle_counts.size() > 1) {
        document["particles"] = config.particle_counts;
    } else {
        document["particles"] = config.train.n_particles;
    }

    if (const auto* g = std::get_if<GaussianAmplitude>(&config.train.packet)) {
        document["packet"] = {{"type", "gaussian"}, {"p0_sigma", g->sigma * g->p0}};
    } else {
        const auto& t = std::get<TabulatedAmplitude>(config.train.packet);
        json samples = json::array();
        for (std::size_t i = 0; i < t.momenta.size(); ++i) {
            samples.push_back({t.momenta[i], t.values[i].real(), t.values[i].imag()});
        }
        document["packet"] = {{"type", "tabulated"}, {"samples", samples}};
    }

    json levels = json::array();
    for (const auto& r : config.train.barrier.resonances()) levels.push_back({{"energy", r.energy}, {"width", r.width}});
    document["barrier"] = {{"resonances", levels}, {"clamp_to_unity", config.train.barrier.clamp_to_unity()}};

    if (const auto* e = std::get_if<ExplicitSpacing>(&config.train.spacing)) {
        document["spacing"] = {{"explicit", e->pattern}};
    } else {
        document["spacing"] = "equal";
    }
    document["grid"] = {{"start", config.grid.start}, {"stop", config.grid.stop}, {"points", config.grid.points}};
    json stats = json::array();
    for (auto s : config.train.statistics) stats.push_back(std::string(to_string(s)));
    document["statistics"] = stats;
    document["tolerance"] = {{"quadrature", config.tolerance.quadrature}, {"singular", config.tolerance.singular}};
    if (!config.output.empty()) document["output"] = config.output;
    return document;
}

ScanOptions scan_options(const RunConfig& config) {
    ScanOptions options;
    options.overlap.quadrature.abs_tol = config.tolerance.quadrature;
    options.counting.singular_threshold = config.tolerance.singular;
    return options;
}

}  // namespace fcs
