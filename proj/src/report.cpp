#include "slicelab/report.hpp"

#include "slicelab/errors.hpp"
#include "slicelab/parallel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace slicelab {

namespace {

nlohmann::ordered_json vertices_json(const std::vector<RatVec>& pts) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const RatVec& p : pts) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const Rational& x : p) row.push_back(to_string(x));
        arr.push_back(std::move(row));
    }
    return arr;
}

const char* contact_name(FaceContact c) {
    switch (c) {
        case FaceContact::Polygon2D: return "polygon";
        case FaceContact::Edge: return "edge";
        case FaceContact::Vertex: return "vertex";
        case FaceContact::Empty: return "empty";
        case FaceContact::HigherDimensional: return "higher-dimensional";
    }
    return "?";
}

}  // namespace

SliceReport build_slice_report(const Hyperplane& h,
                               const std::vector<Rational>& section_levels, double tol) {
    const std::size_t n = h.dimension();
    const CubeSlice s = slice_vertices(h, n);

    SliceReport r;
    r.normal = h.normal();
    r.dimension = n;
    r.degenerate = h.degenerate();
    r.vertex_count = s.vertices.size();
    r.slice_dimension = s.affine_dimension();

    if (r.slice_dimension <= 3) {
        const ZonotopeVerdict zv = zonotope_verdict(s);
        r.verdict = zv.verdict;
        r.verdict_reason = zv.reason;
        if (zv.witness)
            r.witness = WitnessInfo{classify_polygon(*zv.witness), zv.witness->vertices()};
    }

    if (r.slice_dimension == 3) {
        r.facet_census = face_census(s);
        const SurdValue vol = slice_volume_exact(s);
        r.volume_exact = vol;
        r.volume_float = vol.to_double();
    }

    {
        const FaceAt f = face_at(s, n - 1, -1);
        FaceAtInfo info;
        info.contact = contact_name(f.contact);
        if (f.polygon) {
            info.face_class = classify_polygon(*f.polygon);
            info.vertices = f.polygon->vertices();
        } else {
            info.vertices = f.contact_points;
        }
        r.face_at_t = std::move(info);
    }

    r.quadrature = slice_volume_quadrature(to_ratvec(h.normal()), tol);
    const double slack = tol + r.quadrature.error_bound;
    r.ball_bounds_ok = r.quadrature.value >= 1.0 - slack &&
                       r.quadrature.value <= std::numbers::sqrt2 + slack;

    if (!section_levels.empty() && r.slice_dimension == 3) {
        std::vector<SectionInfo> secs(section_levels.size());
        parallel_for(section_levels.size(), [&](std::size_t i) {
            const Rational& level = section_levels[i];
            SectionInfo info;
            info.level = level;
            const std::vector<RatVec> pts = section_vertices(s, n - 1, level);
            info.vertex_count = pts.size();
            const AreaValue area = section_area(s, n - 1, level);
            info.area = area.value;
            info.chart_area = area.chart_area;
            if (pts.size() >= 3) info.face_class = classify_polygon(Polygon::from_unordered(pts));
            secs[i] = std::move(info);
        });
        r.sections = std::move(secs);
    }
    return r;
}

nlohmann::ordered_json to_json(const SliceReport& r) {
    nlohmann::ordered_json j;

    nlohmann::ordered_json normal = nlohmann::ordered_json::array();
    for (const Int& x : r.normal) normal.push_back(x.str());
    j["normal"] = std::move(normal);
    j["dimension"] = r.dimension;
    j["degenerate"] = r.degenerate;
    j["vertex_count"] = r.vertex_count;
    j["slice_dimension"] = r.slice_dimension;

    if (r.facet_census) {
        nlohmann::ordered_json census;
        for (const auto& [cls, cnt] : *r.facet_census) census[to_string(cls)] = cnt;
        j["facet_census"] = std::move(census);
    } else {
        j["facet_census"] = nullptr;
    }

    j["verdict"] = r.verdict ? nlohmann::ordered_json(to_string(*r.verdict))
                             : nlohmann::ordered_json(nullptr);
    j["verdict_reason"] = r.verdict_reason;
    if (r.witness) {
        nlohmann::ordered_json w;
        w["class"] = to_string(r.witness->face_class);
        w["vertices"] = vertices_json(r.witness->vertices);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }

    j["volume_exact"] = r.volume_exact ? nlohmann::ordered_json(r.volume_exact->str())
                                       : nlohmann::ordered_json(nullptr);
    j["volume_float"] = r.volume_float ? nlohmann::ordered_json(*r.volume_float)
                                       : nlohmann::ordered_json(nullptr);

    j["quadrature_volume"] = r.quadrature.value;
    j["quadrature_error_bound"] = r.quadrature.error_bound;
    j["quadrature_truncation_T"] = r.quadrature.truncation_T;
    j["quadrature_panels"] = r.quadrature.panel_count;
    j["ball_bounds_ok"] = r.ball_bounds_ok;

    if (r.face_at_t) {
        nlohmann::ordered_json f;
        f["contact"] = r.face_at_t->contact;
        f["class"] = r.face_at_t->face_class
                         ? nlohmann::ordered_json(to_string(*r.face_at_t->face_class))
                         : nlohmann::ordered_json(nullptr);
        f["vertices"] = vertices_json(r.face_at_t->vertices);
        j["face_at_t"] = std::move(f);
    } else {
        j["face_at_t"] = nullptr;
    }

    if (r.sections) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const SectionInfo& s : *r.sections) {
            nlohmann::ordered_json sec;
            sec["level"] = to_string(s.level);
            sec["vertex_count"] = s.vertex_count;
            sec["class"] = s.face_class ? nlohmann::ordered_json(to_string(*s.face_class))
                                        : nlohmann::ordered_json(nullptr);
            sec["area"] = s.area.str();
            sec["chart_area"] = to_string(s.chart_area);
            arr.push_back(std::move(sec));
        }
        j["sections"] = std::move(arr);
    } else {
        j["sections"] = nullptr;
    }
    return j;
}

std::string render_text(const SliceReport& r) {
    std::ostringstream os;
    os << "normal            (";
    for (std::size_t i = 0; i < r.normal.size(); ++i)
        os << (i ? ", " : "") << r.normal[i].str();
    os << ")\n";
    os << "dimension         " << r.dimension << "\n";
    os << "degenerate        " << (r.degenerate ? "yes" : "no") << "\n";
    os << "vertices          " << r.vertex_count << "\n";
    os << "slice dimension   " << r.slice_dimension << "\n";
    if (r.facet_census) {
        os << "facet census      ";
        bool first = true;
        for (const auto& [cls, cnt] : *r.facet_census) {
            os << (first ? "" : ", ") << to_string(cls) << " x " << cnt;
            first = false;
        }
        os << "\n";
    }
    if (r.verdict) {
        os << "verdict           " << to_string(*r.verdict) << " (" << r.verdict_reason << ")\n";
        if (r.witness) {
            os << "witness           " << to_string(r.witness->face_class) << ":";
            for (const RatVec& v : r.witness->vertices) os << " " << to_string(v);
            os << "\n";
        }
    }
    if (r.volume_exact)
        os << "volume (exact)    " << r.volume_exact->str() << " = " << *r.volume_float << "\n";
    os << "volume (quad)     " << r.quadrature.value << " +- " << r.quadrature.error_bound
       << "\n";
    os << "ball bounds       " << (r.ball_bounds_ok ? "pass" : "FAIL")
       << "  [1, sqrt(2)]\n";
    if (r.face_at_t) {
        os << "face at t=-1/2    " << r.face_at_t->contact;
        if (r.face_at_t->face_class) os << " " << to_string(*r.face_at_t->face_class);
        os << ":";
        for (const RatVec& v : r.face_at_t->vertices) os << " " << to_string(v);
        os << "\n";
    }
    if (r.sections) {
        for (const SectionInfo& s : *r.sections) {
            os << "section t=" << to_string(s.level) << "    "
               << (s.face_class ? to_string(*s.face_class) : "degenerate")
               << ", area " << s.area.str() << ", chart area " << to_string(s.chart_area)
               << "\n";
        }
    }
    return os.str();
}

namespace {

struct CatalogSpec {
    const char* label;
    std::vector<int> normal;
    const char* predicted;
    std::optional<Verdict> expect_verdict;
    std::optional<FaceClass> expect_face;
};

const std::vector<CatalogSpec>& catalog_specs() {
    static const std::vector<CatalogSpec> specs = {
        {"all-ones slice (1,1,1,1)", {1, 1, 1, 1}, "triangle face; not a zonoid",
         Verdict::NotZonoid, FaceClass::Triangle},
        {"a=2, below threshold (2,1,1,1)", {2, 1, 1, 1}, "pentagon face; not a zonoid",
         Verdict::NotZonoid, FaceClass::Pentagon},
        {"a=3, at threshold (3,1,1,1)", {3, 1, 1, 1}, "rhombus faces; parallelotope",
         Verdict::Zonotope, FaceClass::Parallelogram},
        {"a=4, above threshold (4,1,1,1)", {4, 1, 1, 1}, "rhombus faces; parallelotope",
         Verdict::Zonotope, FaceClass::Parallelogram},
        {"doubled pair (2,2,1,1)", {2, 2, 1, 1}, "trapezium face; not a zonoid",
         Verdict::NotZonoid, FaceClass::Trapezium},
        {"b+2 <= a (4,2,1,1)", {4, 2, 1, 1}, "parallelogram face; parallelotope",
         Verdict::Zonotope, FaceClass::Parallelogram},
        {"b+2 > a (3,2,1,1)", {3, 2, 1, 1}, "pentagon face; not a zonoid",
         Verdict::NotZonoid, FaceClass::Pentagon},
        {"a >= b+c+1 (5,2,1,1)", {5, 2, 1, 1}, "parallelogram face; zonotope",
         Verdict::Zonotope, FaceClass::Parallelogram},
        {"both conditions fail (3,2,2,1)", {3, 2, 2, 1}, "pentagon face; not a zonoid",
         Verdict::NotZonoid, FaceClass::Pentagon},
        {"borderline hexagon (3,3,2,1)", {3, 3, 2, 1}, "hexagon face",
         std::nullopt, FaceClass::Hexagon},
    };
    return specs;
}

}  // namespace

std::vector<CatalogRow> catalog_rows() {
    const auto& specs = catalog_specs();
    std::vector<CatalogRow> rows(specs.size());
    parallel_for(specs.size(), [&](std::size_t i) {
        const CatalogSpec& cs = specs[i];
        CatalogRow row;
        row.label = cs.label;
        for (int x : cs.normal) row.normal.emplace_back(x);
        row.predicted = cs.predicted;

        const CubeSlice s = slice_vertices(Hyperplane::from_integers(row.normal));
        row.computed_verdict = zonotope_verdict(s).verdict;
        const FaceAt f = face_at(s, s.dimension - 1, -1);
        if (f.polygon) row.computed_face_class = classify_polygon(*f.polygon);

        row.match = (!cs.expect_verdict || row.computed_verdict == *cs.expect_verdict) &&
                    (!cs.expect_face ||
                     (row.computed_face_class && *row.computed_face_class == *cs.expect_face));
        rows[i] = std::move(row);
    });
    return rows;
}

nlohmann::ordered_json to_json(const std::vector<CatalogRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CatalogRow& r : rows) {
        nlohmann::ordered_json j;
        j["label"] = r.label;
        nlohmann::ordered_json normal = nlohmann::ordered_json::array();
        for (const Int& x : r.normal) normal.push_back(x.str());
        j["normal"] = std::move(normal);
        j["predicted"] = r.predicted;
        j["computed_verdict"] = to_string(r.computed_verdict);
        j["computed_face_class"] =
            r.computed_face_class ? nlohmann::ordered_json(to_string(*r.computed_face_class))
                                  : nlohmann::ordered_json(nullptr);
        j["match"] = r.match;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string render_text(const std::vector<CatalogRow>& rows) {
    std::ostringstream os;
    for (const CatalogRow& r : rows) {
        os << (r.match ? "ok   " : "MISS ") << r.label << "  normal (";
        for (std::size_t i = 0; i < r.normal.size(); ++i)
            os << (i ? "," : "") << r.normal[i].str();
        os << ")  predicted: " << r.predicted << "  computed: " << to_string(r.computed_verdict);
        if (r.computed_face_class) os << " / " << to_string(*r.computed_face_class);
        os << "\n";
    }
    return os.str();
}

}  // namespace slicelab
