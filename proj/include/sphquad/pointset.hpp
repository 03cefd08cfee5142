#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "sphquad/sphere.hpp"

namespace sphquad {

/// How a point set came to be: construction kind plus the degree parameter
/// when one applies (t for designs, -1 when unknown). A degree claimed by a
/// file name is recorded here but never trusted without verification.
struct Provenance {
    std::string kind = "unknown";
    int degree = -1;
};

class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<UnitPoint> pts, Provenance prov = {})
        : pts_(std::move(pts)), prov_(std::move(prov)) {}

    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const UnitPoint& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<UnitPoint>& points() const { return pts_; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    const Provenance& provenance() const { return prov_; }
    void set_provenance(Provenance p) { prov_ = std::move(p); }

private:
    std::vector<UnitPoint> pts_;
    Provenance prov_;
};

/// Reads "x y z" per line, '#' starts a comment, blank lines ignored.
/// Rows further than 1e-8 from unit length are rejected, closer ones
/// renormalized. Errors carry 1-based line numbers.
PointSet load_pointset(const std::filesystem::path& file);

/// Same format, parsed from an in-memory string (used by the loader and tests).
PointSet parse_pointset(const std::string& text, const std::string& origin = "<string>");

/// Writes 17-significant-digit coordinates, one point per line, with a short
/// '#' header recording provenance.
void save_pointset(const PointSet& ps, const std::filesystem::path& file);
std::string format_pointset(const PointSet& ps);

/// Degree parsed from names like "design_t5_N36.txt" or "ss031.00961"; -1 if
/// the name encodes none.
int degree_claim_from_filename(const std::string& stem);

/// Points with exact-duplicate removal under the given chordal tolerance;
/// first occurrence wins, order otherwise preserved.
PointSet unique_points(const PointSet& ps, double tol = 1e-12);

}  // namespace sphquad
