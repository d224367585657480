#pragma once

#include <string>
#include <string_view>

#include "lec/classify.hpp"
#include "lec/edge_colouring.hpp"
#include "lec/graph.hpp"
#include "lec/oracle.hpp"
#include "lec/solver.hpp"
#include "lec/verify.hpp"

// JSON and DOT renderings. All JSON has sorted keys and sorted edge lists so
// the output is byte-stable; vertices are printed by label.

namespace lec {

/// {"edges": [{"c", "u", "v"}], "k"}; edges sorted by endpoint ids.
std::string colouring_json(const Graph& g, const EdgeColouring& c);

/// Reads a colouring for g from {"edges": [{"u", "v", "c"}], ...} or from a
/// certificate object holding such a colouring under "colouring". Labels may
/// be strings or integers. Throws ParseError on malformed JSON, Error
/// kInvalidArgument on an unknown or repeated edge and kPartialColouring
/// when an edge of g is missing.
EdgeColouring colouring_from_json(const Graph& g, std::string_view text);

std::string certificate_json(const Graph& g, const LecCertificate& cert);

/// {"accepted", "failing_pair": [u, v] | null}.
std::string verification_json(const Graph& g, const Verification& v);

std::string blocks_json(const Graph& g);

std::string classification_json(const Graph& g, const SmallBlockClass& cls);

std::string oracle_json(const Graph& g, const OracleResult& result);

enum class DotPalette { kColour, kPlain };

/// Fixed eight-colour palette for colours 1..8. Edges with a colour past 8
/// carry only the numeric label.
inline constexpr const char* kDotPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                               "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string to_dot(const Graph& g, const EdgeColouring& c, DotPalette palette = DotPalette::kColour);

}  // namespace lec
