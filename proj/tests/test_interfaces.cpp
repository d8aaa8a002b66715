#include <doctest.h>

#include <cmath>
#include <sstream>

#include "nodallab/csv.hpp"
#include "nodallab/svg.hpp"

using namespace nodallab;

namespace {

int count_occurrences(const std::string& hay, const std::string& needle) {
    int count = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++count;
    return count;
}

} // namespace

TEST_CASE("csv writer: field separators, LF rows, 17 significant digits") {
    std::ostringstream os;
    CsvWriter csv(os);
    csv.header({"a", "b", "c"});
    csv.field(1);
    csv.field(0.1);
    csv.field(std::string("x"));
    csv.end_row();
    const auto s = os.str();
    CHECK(s == "a,b,c\n1,0.10000000000000001,x\n");

    // %.17g round-trips any double through text
    std::ostringstream os2;
    CsvWriter csv2(os2);
    const double v = 0.1 + 0.2;
    csv2.field(v);
    csv2.end_row();
    CHECK(std::stod(os2.str()) == v);

    // fields with separators or quotes are quoted, embedded quotes doubled
    std::ostringstream os3;
    CsvWriter csv3(os3);
    csv3.field(std::string("a,b"));
    csv3.field(std::string("say \"hi\""));
    csv3.field(std::string("plain"));
    csv3.end_row();
    CHECK(os3.str() == "\"a,b\",\"say \"\"hi\"\"\",plain\n");
}

TEST_CASE("chord diagram SVG carries both families and the crossings") {
    const SpherePoint a{Vec3{0, 0, 1}}, b{Vec3{1, 0, 0}};
    const auto d = chord_diagram(a, b, 3);
    std::ostringstream os;
    write_chord_diagram_svg(os, d);
    const auto s = os.str();
    CHECK(s.rfind("<svg", 0) == 0);
    CHECK(s.find("</svg>") != std::string::npos);
    CHECK(count_occurrences(s, "<line") == 6); // two families of three chords
    // n=3 perpendicular: crossings with x_j^2 + x_k^2 < 1 are interior dots
    const auto model = chord_model_count(d);
    CHECK(count_occurrences(s, "<circle") == 1 + static_cast<int>(model.interior + model.boundary));
}

TEST_CASE("contour SVG plots loops and marked zeros") {
    Rng rng(91);
    const auto mesh = icosphere(3);
    const auto u = random_eigenfunction(rng, 2);
    const auto v = random_eigenfunction(rng, 2);
    const auto contours = trace_contours_mesh(u, mesh);
    const auto res = common_zero_search(u, v, mesh);
    std::ostringstream os;
    write_contours_svg(os, contours, res.zeros);
    const auto s = os.str();
    CHECK(s.rfind("<svg", 0) == 0);
    CHECK(count_occurrences(s, "<polygon") == static_cast<int>(contours.size()));
    CHECK(count_occurrences(s, "<circle") >= static_cast<int>(res.zeros.size()));
}
