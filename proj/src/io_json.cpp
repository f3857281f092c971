#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "cabinet/io.hpp"

namespace cabinet {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string describe(std::size_t line, std::size_t column, const std::string& path,
                     const std::string& reason) {
    std::string where;
    if (!path.empty()) {
        where = path;
    } else if (line > 0) {
        where = "line " + std::to_string(line);
        if (column > 0) {
            where += ", column " + std::to_string(column);
        }
    }
    return "ParseError" + (where.empty() ? std::string() : " at " + where) + ": " + reason;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string path, std::string reason,
                       std::optional<ValidationErrorKind> validation)
    : Error(describe(line, column, path, reason)),
      line_(line),
      column_(column),
      path_(std::move(path)),
      reason_(std::move(reason)),
      validation_(validation) {}

UnknownComponent::UnknownComponent(ComponentIndex index)
    : Error("UnknownComponent: no component " + std::to_string(index)), index_(index) {}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
    throw ParseError(0, 0, path, reason);
}

const json& require(const json& obj, const char* key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        fail(path + "." + key, "missing required field");
    }
    return *it;
}

double as_real(const json& v, const std::string& path) {
    if (!v.is_number()) {
        fail(path, "expected a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        fail(path, "expected a finite number");
    }
    return d;
}

ComponentIndex as_index(const json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() > std::numeric_limits<ComponentIndex>::max()) {
        fail(path, "expected a non-negative integer");
    }
    return static_cast<ComponentIndex>(v.get<std::int64_t>());
}

bool as_hot_flag(const json& v, const std::string& path) {
    if (v.is_boolean()) {
        return v.get<bool>();
    }
    if (v.is_number_integer()) {
        const auto i = v.get<std::int64_t>();
        if (i == 0 || i == 1) {
            return i == 1;
        }
    }
    fail(path, "expected true/false or 0/1");
}

std::vector<ComponentIndex> as_index_list(const json& v, const std::string& path) {
    if (!v.is_array()) {
        fail(path, "expected an array of component indices");
    }
    std::vector<ComponentIndex> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        out.push_back(as_index(v[k], path + "[" + std::to_string(k) + "]"));
    }
    return out;
}

Component component_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    Component c;
    c.index = as_index(require(j, "index", path), path + ".index");
    const json& id = require(j, "id", path);
    if (!id.is_string()) {
        fail(path + ".id", "expected a string");
    }
    c.id = id.get<std::string>();
    c.width_mm = as_real(require(j, "widthMm", path), path + ".widthMm");
    c.height_mm = as_real(require(j, "heightMm", path), path + ".heightMm");
    c.depth_mm = as_real(require(j, "depthMm", path), path + ".depthMm");
    c.connects_to = as_index_list(require(j, "connectsTo", path), path + ".connectsTo");
    c.is_hot = as_hot_flag(require(j, "isHot", path), path + ".isHot");
    return c;
}

json parse_json_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, e.byte, "$", e.what());
    }
}

}  // namespace

CabinetDocument parse_components_json(std::string_view text) {
    const json root = parse_json_text(text);
    if (!root.is_object()) {
        fail("$", "expected an object");
    }
    CabinetDocument doc;
    if (const auto it = root.find("formatVersion"); it != root.end()) {
        if (!it->is_number_integer() || it->get<int>() != 1) {
            fail("formatVersion", "unsupported format version");
        }
    }
    if (const auto it = root.find("cabinet"); it != root.end()) {
        if (!it->is_object()) {
            fail("cabinet", "expected an object");
        }
        if (it->contains("usableWidthMm")) {
            doc.cabinet.usable_width_mm = as_real(it->at("usableWidthMm"), "cabinet.usableWidthMm");
            if (doc.cabinet.usable_width_mm <= 0.0) {
                fail("cabinet.usableWidthMm", "must be positive");
            }
        }
        if (it->contains("rowGapMm")) {
            doc.cabinet.row_gap_mm = as_real(it->at("rowGapMm"), "cabinet.rowGapMm");
            if (doc.cabinet.row_gap_mm < 0.0) {
                fail("cabinet.rowGapMm", "must be non-negative");
            }
        }
        if (it->contains("name")) {
            if (!it->at("name").is_string()) {
                fail("cabinet.name", "expected a string");
            }
            doc.cabinet.name = it->at("name").get<std::string>();
        }
    }
    const json& comps = require(root, "components", "$");
    if (!comps.is_array()) {
        fail("components", "expected an array");
    }
    for (std::size_t k = 0; k < comps.size(); ++k) {
        doc.components.push_back(component_from_json(comps[k], "components[" + std::to_string(k) + "]"));
    }

    try {
        doc.components = validate_components(std::move(doc.components));
    } catch (const ValidationError& e) {
        std::string path = "components";
        for (std::size_t k = 0; k < comps.size(); ++k) {
            if (comps[k].at("index").get<ComponentIndex>() == e.component()) {
                path = "components[" + std::to_string(k) + "]";
            }
        }
        throw ParseError(0, 0, path, e.what(), e.kind());
    }
    return doc;
}

namespace {

ordered_json component_to_json(const Component& c) {
    ordered_json j;
    j["index"] = c.index;
    j["id"] = c.id;
    j["widthMm"] = c.width_mm;
    j["heightMm"] = c.height_mm;
    j["depthMm"] = c.depth_mm;
    j["connectsTo"] = c.connects_to;
    j["isHot"] = c.is_hot;
    return j;
}

}  // namespace

std::string write_components_json(const CabinetDocument& doc) {
    ordered_json root;
    root["formatVersion"] = doc.format_version;
    root["cabinet"] = {{"usableWidthMm", doc.cabinet.usable_width_mm},
                       {"rowGapMm", doc.cabinet.row_gap_mm},
                       {"name", doc.cabinet.name}};
    root["components"] = ordered_json::array();
    for (const auto& c : doc.components) {
        root["components"].push_back(component_to_json(c));
    }
    return root.dump(2) + "\n";
}

CabinetDocument load_document(const std::string& path, std::string_view format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string fmt(format);
    if (fmt.empty()) {
        fmt = path.ends_with(".json") ? "json" : "csv";
    }
    if (fmt == "json") {
        return parse_components_json(buf.str());
    }
    if (fmt == "csv") {
        return parse_components_csv(buf.str());
    }
    throw Error("unknown input format '" + fmt + "' (expected csv or json)");
}

CabinetDocument apply_edit(const CabinetDocument& doc, ComponentIndex index,
                           const ComponentEdit& edit) {
    if (index < 1 || index > doc.components.size()) {
        throw UnknownComponent(index);
    }
    CabinetDocument out = doc;
    Component& c = out.components[index - 1];
    if (edit.width_mm) c.width_mm = *edit.width_mm;
    if (edit.height_mm) c.height_mm = *edit.height_mm;
    if (edit.depth_mm) c.depth_mm = *edit.depth_mm;
    if (edit.is_hot) c.is_hot = *edit.is_hot;
    if (edit.connects_to) c.connects_to = *edit.connects_to;
    out.components = validate_components(std::move(out.components));
    return out;
}

namespace {

ordered_json objectives_json(const ObjectiveVector& f) {
    return ordered_json{{"heat", f.heat}, {"wireMm", f.wire_mm}};
}

ordered_json placement_json(const Placement& p) {
    ordered_json j;
    j["totalHeightMm"] = p.total_height_mm;
    j["rows"] = ordered_json::array();
    for (const auto& r : p.rows) {
        j["rows"].push_back(ordered_json{{"yMm", r.y_mm}, {"heightMm", r.height_mm}});
    }
    j["components"] = ordered_json::array();
    for (const auto& c : p.components) {
        j["components"].push_back(ordered_json{{"index", c.index},
                                               {"xMm", c.x_mm},
                                               {"yMm", c.y_mm},
                                               {"widthMm", c.width_mm},
                                               {"heightMm", c.height_mm},
                                               {"row", c.row}});
    }
    return j;
}

ordered_json config_json(const PsaConfig& c) {
    return ordered_json{{"initialTemperature", c.initial_temperature},
                        {"coolingRate", c.cooling_rate},
                        {"stepsPerTemperature", c.steps_per_temperature},
                        {"generatingSetSize", c.generating_set_size},
                        {"weightConstant", c.weight_constant},
                        {"weightFloor", c.weight_floor},
                        {"swapProbability", c.swap_probability},
                        {"seed", c.rng_seed}};
}

}  // namespace

std::string write_result_json(const OptimizationResult& result, const ResultJsonOptions& options) {
    ordered_json root;
    root["formatVersion"] = 1;
    root["kind"] = "psa";
    root["componentCount"] = result.component_count;
    root["seed"] = result.config.rng_seed;
    root["warmStart"] = result.warm_start;
    root["config"] = config_json(result.config);
    root["recommended"] = ordered_json{{"order", result.recommended.layout.order},
                                       {"objectives", objectives_json(result.recommended.objectives)},
                                       {"placement", placement_json(result.recommended.placement)}};
    root["archive"] = ordered_json::array();
    for (const auto& e : result.archive.entries()) {
        root["archive"].push_back(ordered_json{
            {"order", e.layout.order}, {"heat", e.objectives.heat}, {"wireMm", e.objectives.wire_mm}});
    }
    root["initialMean"] = objectives_json(result.initial_mean);
    root["iterations"] = result.iterations;
    root["temperatureLevels"] = result.temperature_levels;
    root["totalConfigurations"] = total_configurations(result.component_count).str();
    root["fractionOfSpace"] = result.fraction_of_space;
    if (options.include_timing) {
        root["wallTimeSeconds"] = result.wall_time_seconds;
    }
    return root.dump(2) + "\n";
}

std::string write_oracle_json(const OracleFront& front, const EvaluationContext& ctx) {
    if (front.entries.empty()) {
        throw EmptyArchive();
    }
    const FrontEntry& best = front.entries.front();
    ordered_json root;
    root["formatVersion"] = 1;
    root["kind"] = "oracle";
    root["componentCount"] = ctx.size();
    root["seed"] = nullptr;
    root["warmStart"] = false;
    root["config"] = nullptr;
    root["recommended"] = ordered_json{
        {"order", best.layout.order},
        {"objectives", objectives_json(best.objectives)},
        {"placement", placement_json(pack(best.layout, ctx.components(), ctx.cabinet()))}};
    root["archive"] = ordered_json::array();
    for (const auto& e : front.entries) {
        root["archive"].push_back(ordered_json{
            {"order", e.layout.order}, {"heat", e.objectives.heat}, {"wireMm", e.objectives.wire_mm}});
    }
    root["initialMean"] = nullptr;
    root["iterations"] = front.enumerated_count;
    root["temperatureLevels"] = 0;
    root["totalConfigurations"] = total_configurations(ctx.size()).str();
    root["fractionOfSpace"] = 1.0;
    return root.dump(2) + "\n";
}

Layout read_recommended_layout(std::string_view result_json) {
    const json root = parse_json_text(result_json);
    if (!root.is_object()) {
        fail("$", "expected an object");
    }
    const json& rec = require(root, "recommended", "$");
    return Layout{as_index_list(require(rec, "order", "recommended"), "recommended.order")};
}

}  // namespace cabinet
