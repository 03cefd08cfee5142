#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sphquad {

/// RFC-4180-style CSV with LF line endings and 17-significant-digit floats.
class CsvWriter {
public:
    CsvWriter(std::ostream& os, std::vector<std::string> columns);

    void row(const std::vector<std::string>& cells);  // must match the header width

    static std::string field(double v);       // %.17g
    static std::string field(long long v);
    static std::string field(int v) { return field(static_cast<long long>(v)); }
    static std::string field(std::size_t v) { return field(static_cast<long long>(v)); }

private:
    std::ostream& os_;
    std::size_t width_;
    void emit(const std::vector<std::string>& cells);
};

}  // namespace sphquad
