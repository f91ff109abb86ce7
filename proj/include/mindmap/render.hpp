// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <string>
#include <string_view>

#include "mindmap/generator.hpp"

namespace mindmap {

/// Standalone SVG: a canvas frame, one `<path class="edge">` per parent link in
/// node order, then one `<g class="node">` per node holding its domain glyph
/// and word label. An edge is straight when the child sits at its full path
/// length from the parent; otherwise (clamped nodes) it bends at the midpoint
/// so the drawn length still equals the node's path_length.
std::string render_svg(const MindMap& map);

/// Points of the drawn edge from `from` to `to` for a path of `length`.
std::vector<Point> edge_polyline(Point from, Point to, double length, const Canvas& canvas);

/// Escapes &, <, >, " and ' for XML text and attributes.
std::string xml_escape(std::string_view text);

inline constexpr int kTraceSchemaVersion = 1;

/// Canonical JSON trace: schema_version, rng_seed, canvas, config snapshot and
/// one record per node. Keys are sorted, so equal maps give equal bytes.
std::string export_trace(const MindMap& map);

/// Inverse of export_trace(). Throws FormatError on schema violations.
MindMap parse_trace(std::string_view json_text);

}  // namespace mindmap
