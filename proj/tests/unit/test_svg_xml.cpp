#include "doctest.h"

#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "cabinet/datasets.hpp"
#include "cabinet/io.hpp"

using namespace cabinet;

TEST_CASE("SVG is well-formed XML with lengths matching the placement") {
    auto comps = sample15_components();
    comps[3].id = "quote\" & <tag>";
    const Placement p = pack(identity_layout(15), comps, sample15_cabinet());
    const std::string svg = render_svg(p, comps, {1, 1});

    std::istringstream in(svg);
    boost::property_tree::ptree tree;
    REQUIRE_NOTHROW(boost::property_tree::read_xml(in, tree));

    std::size_t wires = 0;
    for (const auto& group : tree.get_child("svg")) {
        if (group.first != "g") continue;
        for (const auto& child : group.second) {
            if (child.first != "polyline") continue;
            ++wires;
            const auto a = child.second.get<ComponentIndex>("<xmlattr>.data-a");
            const auto b = child.second.get<ComponentIndex>("<xmlattr>.data-b");
            const double length = child.second.get<double>("<xmlattr>.data-length-mm");
            const Point pa = component_center(p, a), pb = component_center(p, b);
            CHECK(length == doctest::Approx(std::abs(pa.x_mm - pb.x_mm) + std::abs(pa.y_mm - pb.y_mm)));
        }
    }
    CHECK(wires == 17);
}
