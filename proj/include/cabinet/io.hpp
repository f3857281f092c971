/**
 * @file io.hpp
 * @brief Cabinet documents (CSV / JSON), result JSON and SVG rendering.
 *
 * CSV layout:
 *
 *     !width=600
 *     !rowgap=40
 *     #,ID,Width,Height,Depth,ConnectsTo,IsHot
 *     1,0001,120.0,150.0,200.0,3,1
 *     14,0009,111.6,170.0,200.0,12;15,0
 *
 * Directive lines are optional and must precede the header. ConnectsTo is a
 * semicolon-separated index list and may be empty; IsHot is 0 or 1.
 */

#ifndef CABINET_IO_HPP
#define CABINET_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "cabinet/model.hpp"
#include "cabinet/oracle.hpp"
#include "cabinet/psa.hpp"

namespace cabinet {

struct CabinetDocument {
    int format_version = 1;
    CabinetSpec cabinet;
    std::vector<Component> components;

    friend bool operator==(const CabinetDocument&, const CabinetDocument&) = default;
};

/// Malformed input. `line`/`column` are 1-based (0 when unknown); `path` is a
/// JSON path such as "components[3].widthMm" for JSON input.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::string path, std::string reason,
               std::optional<ValidationErrorKind> validation = std::nullopt);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& path() const noexcept { return path_; }
    const std::string& reason() const noexcept { return reason_; }
    /// Set when the document parsed but failed component validation.
    std::optional<ValidationErrorKind> validation() const noexcept { return validation_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string path_;
    std::string reason_;
    std::optional<ValidationErrorKind> validation_;
};

CabinetDocument parse_components_csv(std::string_view text);
std::string write_components_csv(const CabinetDocument& doc);

CabinetDocument parse_components_json(std::string_view text);
std::string write_components_json(const CabinetDocument& doc);

/// Reads either format; `format` is "csv", "json", or empty to infer from the
/// extension. Throws Error if the file cannot be read.
CabinetDocument load_document(const std::string& path, std::string_view format = {});

/// Optional per-field replacement of one component.
struct ComponentEdit {
    std::optional<double> width_mm;
    std::optional<double> height_mm;
    std::optional<double> depth_mm;
    std::optional<bool> is_hot;
    std::optional<std::vector<ComponentIndex>> connects_to;
};

class UnknownComponent : public Error {
public:
    explicit UnknownComponent(ComponentIndex index);
    ComponentIndex index() const noexcept { return index_; }

private:
    ComponentIndex index_;
};

/// Apply `edit` to component `index` and re-validate. Throws UnknownComponent
/// or ValidationError; `doc` is left untouched on failure.
CabinetDocument apply_edit(const CabinetDocument& doc, ComponentIndex index,
                           const ComponentEdit& edit);

struct ResultJsonOptions {
    bool include_timing = true;
};

std::string write_result_json(const OptimizationResult& result,
                              const ResultJsonOptions& options = {});

/// The exhaustive front in the same schema ("kind": "oracle", "config": null).
std::string write_oracle_json(const OracleFront& front, const EvaluationContext& ctx);

/// The recommended layout stored in a result document.
Layout read_recommended_layout(std::string_view result_json);

/// One rect per component (hot ones highlighted and labeled), one L-shaped
/// polyline per wire between centers, and an objective summary line.
std::string render_svg(const Placement& placement, const std::vector<Component>& components,
                       const ObjectiveVector& objectives);

}  // namespace cabinet

#endif  // CABINET_IO_HPP
