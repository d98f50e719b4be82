#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "pire/core/complex.hpp"
#include "pire/core/paired_graph.hpp"

namespace pire::io {

using nlohmann::json;

// File schemas (unknown keys are rejected; ids may be strings or integers and
// are always written back as strings):
//
//   graph:        {"vertices": [id...], "edges": [{"id", "end0", "end1"}...]}
//   paired graph: graph + {"pairs": [[v, v']...], "rotation"?: {v: [[edge, side]...]}}
//   complex:      {"skeleton": graph, "cells": [[[edge, entry_side]...]...],
//                  "kind": "genuine" | "punctured"}
//
// All parse errors throw InputError.

Multigraph graph_from_json(const json& j);
json to_json(const Multigraph& g);

PairedGraph paired_graph_from_json(const json& j);
json to_json(const PairedGraph& pg);

TwoComplex complex_from_json(const json& j);
json to_json(const TwoComplex& c);

/// Reads a paired graph object while ignoring `extra_keys` (used by formats
/// that extend the paired-graph schema).
PairedGraph paired_graph_from_json(const json& j, std::initializer_list<const char*> extra_keys);

/// Throws InputError on unknown keys or missing required keys.
void check_keys(const json& j, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional, const char* what);

json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with two-space indent and a trailing newline.
void write_json_file(const std::filesystem::path& path, const json& j);
std::string dump(const json& j);

}  // namespace pire::io
