#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "etherdrift/cli.hpp"

namespace etherdrift::cli {

namespace {

void emit(std::ostream& out, const nlohmann::ordered_json& value) {
    using Type = nlohmann::ordered_json::value_t;
    switch (value.type()) {
        case Type::number_float:
            out << format_double(value.get<double>());
            return;
        case Type::array: {
            out << '[';
            bool first = true;
            for (const auto& item : value) {
                if (!first) out << ',';
                first = false;
                emit(out, item);
            }
            out << ']';
            return;
        }
        case Type::object: {
            out << '{';
            bool first = true;
            for (const auto& [key, item] : value.items()) {
                if (!first) out << ',';
                first = false;
                out << nlohmann::ordered_json(key).dump() << ':';
                emit(out, item);
            }
            out << '}';
            return;
        }
        default:
            out << value.dump();
    }
}

}  // namespace

std::string format_double(double value) {
    if (!std::isfinite(value)) return "null";
    return fmt::format("{:.17g}", value);
}

void write_json(std::ostream& out, const nlohmann::ordered_json& value) {
    emit(out, value);
    out << '\n';
}

}  // namespace etherdrift::cli
