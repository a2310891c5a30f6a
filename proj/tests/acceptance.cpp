// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exits nonzero if any fails.

#include "slicelab/analytic.hpp"
#include "slicelab/errors.hpp"
#include "slicelab/facets.hpp"
#include "slicelab/linalg.hpp"
#include "slicelab/measure.hpp"
#include "slicelab/report.hpp"
#include "slicelab/zonotope.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace slicelab;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0 && elapsed > time_limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s  criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                elapsed, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

Hyperplane make_normal(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return Hyperplane::from_integers(v);
}

RatVec rv(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

int main() {
    criterion(1, "exact volume of the (1,1,1,1) slice is 4/3", 1.0, [](std::string& d) {
        const SurdValue vol = slice_volume_exact(slice_vertices(make_normal({1, 1, 1, 1})));
        d = vol.str();
        return vol == SurdValue(Rational(4, 3));
    });

    criterion(2, "sinc integrals: I_4 = 2/3 and I_2 = 1 within 1e-8", 5.0, [](std::string& d) {
        const QuadratureResult i4 = sinc_power_integral(4, 1e-10);
        const QuadratureResult i2 = sinc_power_integral(2, 1e-10);
        std::ostringstream os;
        os << "I_4 = " << i4.value << ", I_2 = " << i2.value;
        d = os.str();
        return std::fabs(i4.value - 2.0 / 3.0) <= 1e-8 && std::fabs(i2.value - 1.0) <= 1e-8;
    });

    criterion(3, "quadrature matches exact volume on 50 random normals", 60.0,
              [](std::string& d) {
                  std::mt19937_64 rng(350);
                  std::uniform_int_distribution<int> entry(1, 9);
                  double worst = 0.0;
                  for (int trial = 0; trial < 50; ++trial) {
                      IntVec raw(4);
                      for (auto& x : raw) x = entry(rng);
                      const Hyperplane h = Hyperplane::from_integers(raw);
                      const double exact =
                          slice_volume_exact(slice_vertices(h)).to_double();
                      const QuadratureResult q =
                          slice_volume_quadrature(to_ratvec(h.normal()), 1e-8);
                      worst = std::max(worst, std::fabs(q.value - exact));
                  }
                  std::ostringstream os;
                  os << "worst |quad - exact| = " << worst;
                  d = os.str();
                  return worst <= 1e-6;
              });

    criterion(4, "triangle face of the (1,1,1,1) slice at t = -1/2", 0, [](std::string& d) {
        const FaceAt f = face_at(slice_vertices(make_normal({1, 1, 1, 1})), 3, -1);
        if (f.contact != FaceContact::Polygon2D) {
            d = "no 2-dimensional face";
            return false;
        }
        const Rational h(1, 2);
        const std::set<RatVec> expect = {
            {h, -h, h, -h},
            {h, h, -h, -h},
            {-h, h, h, -h},
        };
        const auto got = f.polygon->sorted_vertices();
        d = std::to_string(got.size()) + " vertices";
        return std::set<RatVec>(got.begin(), got.end()) == expect &&
               classify_polygon(*f.polygon) == FaceClass::Triangle;
    });

    criterion(5, "section chart areas follow 3/4 - c^2, hexagons shrinking to the triangle", 0,
              [](std::string& d) {
                  const CubeSlice s = slice_vertices(make_normal({1, 1, 1, 1}));
                  for (const Rational c :
                       {Rational(0), Rational(1, 8), Rational(1, 4), Rational(3, 8)}) {
                      const AreaValue av = section_area(s, 3, -c);
                      if (av.chart_area != Rational(3, 4) - c * c) {
                          d = "chart area mismatch at c = " + to_string(c);
                          return false;
                      }
                      const Polygon sec = Polygon::from_unordered(section_vertices(s, 3, -c));
                      if (classify_polygon(sec) != FaceClass::Hexagon) {
                          d = "section at c = " + to_string(c) + " is not a hexagon";
                          return false;
                      }
                  }
                  const Polygon face =
                      Polygon::from_unordered(section_vertices(s, 3, Rational(-1, 2)));
                  if (classify_polygon(face) != FaceClass::Triangle) {
                      d = "limit section is not the triangle";
                      return false;
                  }
                  return true;
              });

    criterion(6, "zonotope thresholds: (a,1,1,1) and a >= b+c+1", 0, [](std::string& d) {
        for (int a = 1; a <= 6; ++a) {
            const ZonotopeVerdict v =
                zonotope_verdict(slice_vertices(make_normal({a, 1, 1, 1})));
            const bool want_zono = a >= 3;
            if (want_zono != (v.verdict == Verdict::Zonotope)) {
                d = "threshold wrong at a = " + std::to_string(a);
                return false;
            }
            if (a == 2 && (!v.witness || classify_polygon(*v.witness) != FaceClass::Pentagon)) {
                d = "a = 2 witness is not a pentagon";
                return false;
            }
        }
        std::mt19937_64 rng(41);
        std::uniform_int_distribution<int> small(1, 5), pad(0, 3);
        for (int trial = 0; trial < 20; ++trial) {
            const int b = small(rng), c = small(rng);
            const int a = b + c + 1 + pad(rng);
            const ZonotopeVerdict v =
                zonotope_verdict(slice_vertices(make_normal({a, b, c, 1})));
            if (v.verdict != Verdict::Zonotope) {
                d = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(c) + ",1) not recognized";
                return false;
            }
        }
        return true;
    });

    criterion(7, "(2,2,1,1) is NotZonoid with a trapezium witness", 0, [](std::string& d) {
        const ZonotopeVerdict v = zonotope_verdict(slice_vertices(make_normal({2, 2, 1, 1})));
        d = std::string(to_string(v.verdict)) +
            (v.witness ? std::string(" / ") + to_string(classify_polygon(*v.witness)) : "");
        return v.verdict == Verdict::NotZonoid && v.witness &&
               classify_polygon(*v.witness) == FaceClass::Trapezium;
    });

    criterion(8, "100 random slices in R^3 are zonotopes or degenerate cubes", 0,
              [](std::string& d) {
                  std::mt19937_64 rng(80);
                  std::uniform_int_distribution<int> entry(-9, 9);
                  for (int trial = 0; trial < 100; ++trial) {
                      IntVec raw(3);
                      bool nonzero = false;
                      for (auto& x : raw) {
                          x = entry(rng);
                          if (x != 0) nonzero = true;
                      }
                      if (!nonzero) raw[0] = 1;
                      const Verdict v =
                          zonotope_verdict(slice_vertices(Hyperplane::from_integers(raw)))
                              .verdict;
                      if (v != Verdict::Zonotope && v != Verdict::DegenerateCube) {
                          d = "counterexample found";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(9, "ball bounds hold for 100 random normals in n = 4,5,6", 120.0,
              [](std::string& d) {
                  std::mt19937_64 rng(90);
                  std::uniform_int_distribution<int> entry(1, 9), dim(4, 6);
                  double lo = 10.0, hi = 0.0;
                  for (int trial = 0; trial < 100; ++trial) {
                      const std::size_t n = dim(rng);
                      RatVec normal(n);
                      for (auto& x : normal) x = entry(rng);
                      const QuadratureResult q = slice_volume_quadrature(normal, 1e-8);
                      lo = std::min(lo, q.value);
                      hi = std::max(hi, q.value);
                      if (q.value < 1.0 - 1e-6 || q.value > std::numbers::sqrt2 + 1e-6) {
                          d = "volume " + std::to_string(q.value) + " out of bounds";
                          return false;
                      }
                  }
                  std::ostringstream os;
                  os << "range [" << lo << ", " << hi << "]";
                  d = os.str();
                  return true;
              });

    criterion(10, "face census of (1,1,1,1) is exactly {Triangle: 8}", 0, [](std::string& d) {
        const auto census = face_census(slice_vertices(make_normal({1, 1, 1, 1})));
        std::ostringstream os;
        for (const auto& [cls, cnt] : census) os << to_string(cls) << " x " << cnt << " ";
        d = os.str();
        return census.size() == 1 && census.count(FaceClass::Triangle) == 1 &&
               census.at(FaceClass::Triangle) == 8;
    });

    criterion(11, "sections of (3,1,1,1) all have exact area sqrt(11)/3", 0,
              [](std::string& d) {
                  const CubeSlice s = slice_vertices(make_normal({3, 1, 1, 1}));
                  const SurdValue expect(Rational(1, 3), 11);
                  std::mt19937_64 rng(110);
                  std::uniform_int_distribution<int> num(-15, 15);
                  std::vector<Rational> levels = {Rational(0), Rational(1, 4), Rational(-3, 8),
                                                  Rational(7, 16), Rational(-15, 32)};
                  for (int i = 0; i < 15; ++i) levels.emplace_back(num(rng), 32);
                  for (const Rational& c : levels) {
                      if (section_area(s, 3, c).value != expect) {
                          d = "area mismatch at c = " + to_string(c);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(12, "zonotope round-trips and shadow-vs-hull equality", 0, [](std::string& d) {
        std::mt19937_64 rng(120);
        std::uniform_int_distribution<int> entry(-4, 4);
        int nondegenerate = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t count = 2 + trial % 4;
            std::vector<RatVec> gens;
            while (gens.size() < count) {
                RatVec g{Rational(entry(rng)), Rational(entry(rng))};
                if (!is_zero(g)) gens.push_back(std::move(g));
            }
            const Polygon z = zonotope_from_segments_2d({gens});
            if (z.is_degenerate_segment()) continue;
            ++nondegenerate;
            const SegmentGenerators back = decompose_symmetric_polygon(z);
            if (!zonotope_from_segments_2d(back).same_vertex_set(z)) {
                d = "round-trip failed";
                return false;
            }
        }
        if (nondegenerate < 80) {
            d = "too few nondegenerate samples";
            return false;
        }

        for (std::size_t n = 2; n <= 5; ++n) {
            for (int trial = 0; trial < 2; ++trial) {
                RatVec dir(n);
                bool nonzero = false;
                for (auto& x : dir) {
                    x = entry(rng);
                    if (x != 0) nonzero = true;
                }
                if (!nonzero) dir[0] = 1;
                const ProjectedZonotope z = project_cube(n, dir);
                std::vector<RatVec> corners;
                for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
                    RatVec corner(n);
                    for (std::size_t i = 0; i < n; ++i)
                        corner[i] = (mask >> i & 1) ? Rational(1, 2) : Rational(-1, 2);
                    corners.push_back(z.chart_coordinates(corner));
                }
                if (extreme_points(corners) != z.vertices) {
                    d = "shadow differs from hull oracle at n = " + std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    });

    criterion(13, "catalog gate: every row matches and the CLI exits 0", 0, [](std::string& d) {
        for (const CatalogRow& row : catalog_rows()) {
            if (!row.match) {
                d = "mismatch in row '" + row.label + "'";
                return false;
            }
        }
        const std::string cmd = std::string(SLICELAB_CLI_PATH) + " catalog > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        d = "cli exit code " + std::to_string(code);
        return code == 0;
    });

    if (failures == 0) {
        std::printf("all %d criteria passed\n", 13);
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
