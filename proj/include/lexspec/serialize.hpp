#pragma once

// JSON documents. Inputs carry a "kind" field: "observable" or "resolution".
//
//   {"kind": "observable", "k": 2, "d": 1, "n": 2,
//    "atoms": [{"point": [1, "3/2"], "weight": {"h": 1, "g": [2]}}]}
//   {"kind": "resolution", "k": 2, "d": 1, "n": 2,
//    "breakpoints": [[1, 2], [3]],
//    "cells": [{"index": [0, 0], "value": {"h": 0, "g": [0]}}, ...]}
//
// Rationals are JSON integers or "p/q" strings. Every cell must be listed
// exactly once. Weights may also be written as strings such as "(1; 2)".
// Without a "kind" field the document type is inferred from "atoms" or
// "cells".

#include "lexspec/charpoints.hpp"
#include "lexspec/verify.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace lexspec {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const LexElement& a);
LexElement lex_from_json(const Json& j, Signature sig);

Json to_json(const DiscreteObservable& x);
DiscreteObservable observable_from_json(const Json& j);
Json to_json(const StepResolution& f);
StepResolution resolution_from_json(const Json& j);

/// Any input document; the resolution is derived when an observable is given.
struct Document {
  std::optional<DiscreteObservable> observable;
  StepResolution resolution;
};
Document document_from_json(const Json& j);
/// Reads and parses a file; throws ParseError with the path on failure.
Document load_document(const std::string& path);

Json to_json(const ExtPoint& p);
ExtPoint ext_point_from_json(const Json& j);

Json to_json(const LevelDecomposition& levels);
LevelDecomposition levels_from_json(const Json& j);
Json to_json(const BlockReport& report);
BlockReport block_report_from_json(const Json& j, Signature sig);
Json to_json(const BoundsReport& b);
BoundsReport bounds_from_json(const Json& j);
Json to_json(const AxiomReport& r);
AxiomReport axioms_from_json(const Json& j);
Json to_json(const ReconstructResult& r);
ReconstructResult reconstruct_from_json(const Json& j);
Json to_json(const Summary& s);
Summary summary_from_json(const Json& j);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace lexspec
