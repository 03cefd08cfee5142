#include "sphquad/pointset.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sphquad/errors.hpp"

namespace sphquad {

PointSet parse_pointset(const std::string& text, const std::string& origin) {
    std::vector<UnitPoint> pts;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n\f\v") == std::string::npos) continue;
        std::istringstream ls(line);
        double x, y, z;
        if (!(ls >> x >> y >> z)) {
            throw ParseError(origin + ": expected three coordinates", lineno);
        }
        std::string rest;
        if (ls >> rest) {
            throw ParseError(origin + ": trailing token '" + rest + "'", lineno);
        }
        try {
            pts.push_back(UnitPoint::checked(x, y, z));
        } catch (const NotUnitError& e) {
            throw ParseError(origin + ": " + e.what(), lineno);
        }
    }
    return PointSet(std::move(pts), Provenance{"file", -1});
}

PointSet load_pointset(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open point file: " + file.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    PointSet ps = parse_pointset(buf.str(), file.filename().string());
    Provenance prov{"file", degree_claim_from_filename(file.stem().string())};
    ps.set_provenance(prov);
    return ps;
}

std::string format_pointset(const PointSet& ps) {
    std::string out;
    out += "# " + ps.provenance().kind;
    if (ps.provenance().degree >= 0) out += " t=" + std::to_string(ps.provenance().degree);
    out += " N=" + std::to_string(ps.size()) + "\n";
    char buf[96];
    for (const UnitPoint& p : ps) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", p.x(), p.y(), p.z());
        out += buf;
    }
    return out;
}

void save_pointset(const PointSet& ps, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write point file: " + file.string());
    }
    out << format_pointset(ps);
}

int degree_claim_from_filename(const std::string& stem) {
    // Two recognized shapes: an explicit "t<digits>" token, or a leading
    // letter block followed by digits ("ss031" style).
    for (std::size_t i = 0; i + 1 < stem.size(); ++i) {
        if (stem[i] == 't' && std::isdigit(static_cast<unsigned char>(stem[i + 1])) &&
            (i == 0 || !std::isalnum(static_cast<unsigned char>(stem[i - 1])))) {
            return std::atoi(stem.c_str() + i + 1);
        }
    }
    std::size_t i = 0;
    while (i < stem.size() && std::isalpha(static_cast<unsigned char>(stem[i]))) ++i;
    if (i > 0 && i < stem.size() && std::isdigit(static_cast<unsigned char>(stem[i]))) {
        return std::atoi(stem.c_str() + i);
    }
    return -1;
}

PointSet unique_points(const PointSet& ps, double tol) {
    std::vector<UnitPoint> kept;
    kept.reserve(ps.size());
    for (const UnitPoint& p : ps) {
        bool dup = false;
        for (const UnitPoint& q : kept) {
            const Vec3 d = p.vec() - q.vec();
            if (d.norm() <= tol) {
                dup = true;
                break;
            }
        }
        if (!dup) kept.push_back(p);
    }
    return PointSet(std::move(kept), ps.provenance());
}

}  // namespace sphquad
