#pragma once

/// Aggregated slice reports and the fixed example catalog, with JSON and
/// plain-text rendering. Rationals serialize as "p/q" strings and surds as
/// "q*sqrt(r)"; floats appear only in *_float / quadrature fields.

#include "slicelab/analytic.hpp"
#include "slicelab/cube_slice.hpp"
#include "slicelab/facets.hpp"
#include "slicelab/measure.hpp"
#include "slicelab/surd.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slicelab {

struct WitnessInfo {
    FaceClass face_class;
    std::vector<RatVec> vertices;
};

struct FaceAtInfo {
    std::string contact;  // "polygon", "edge", "vertex", "empty"
    std::optional<FaceClass> face_class;
    std::vector<RatVec> vertices;
};

struct SectionInfo {
    Rational level;
    std::size_t vertex_count = 0;
    std::optional<FaceClass> face_class;  // absent for degenerate contacts
    SurdValue area;
    Rational chart_area;
};

struct SliceReport {
    IntVec normal;
    std::size_t dimension = 0;
    bool degenerate = false;
    std::size_t vertex_count = 0;
    std::size_t slice_dimension = 0;

    // 3-dimensional slices only; otherwise absent.
    std::optional<std::map<FaceClass, std::size_t>> facet_census;
    std::optional<Verdict> verdict;
    std::optional<WitnessInfo> witness;
    std::string verdict_reason;
    std::optional<SurdValue> volume_exact;
    std::optional<double> volume_float;
    std::optional<FaceAtInfo> face_at_t;

    QuadratureResult quadrature;
    bool ball_bounds_ok = false;

    std::optional<std::vector<SectionInfo>> sections;
};

/// Full report for one normal; section levels may be empty. `tol` drives the
/// quadrature column.
SliceReport build_slice_report(const Hyperplane& h,
                               const std::vector<Rational>& section_levels = {},
                               double tol = 1e-8);

nlohmann::ordered_json to_json(const SliceReport& r);
std::string render_text(const SliceReport& r);

struct CatalogRow {
    std::string label;
    IntVec normal;
    std::string predicted;            // the source example's stated outcome
    Verdict computed_verdict;
    std::optional<FaceClass> computed_face_class;  // face at t = -1/2
    bool match = false;
};

/// The fixed catalog of worked examples: the triangle slice, the a-threshold
/// family, the trapezium and pentagon cases, and the general-coefficients
/// rows including the open hexagon case.
std::vector<CatalogRow> catalog_rows();

nlohmann::ordered_json to_json(const std::vector<CatalogRow>& rows);
std::string render_text(const std::vector<CatalogRow>& rows);

}  // namespace slicelab
