#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace nodallab {

/// RFC-4180 CSV writer: '.' decimal separator, 17 significant digits, LF rows.
/// Identical rows in, identical bytes out.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void header(const std::vector<std::string>& names) { row_strings(names); }

    void field(const std::string& s) {
        sep();
        if (s.find_first_of(",\"\r\n") == std::string::npos) {
            os_ << s;
            return;
        }
        os_ << '"';
        for (char c : s) {
            if (c == '"') os_ << '"';
            os_ << c;
        }
        os_ << '"';
    }
    void field(long long v) {
        sep();
        os_ << v;
    }
    void field(int v) { field(static_cast<long long>(v)); }
    void field(double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        sep();
        os_ << buf;
    }
    void end_row() {
        os_ << '\n';
        first_ = true;
    }

    void row_strings(const std::vector<std::string>& fields) {
        for (const auto& f : fields) field(f);
        end_row();
    }

private:
    void sep() {
        if (!first_) os_ << ',';
        first_ = false;
    }
    std::ostream& os_;
    bool first_ = true;
};

} // namespace nodallab
