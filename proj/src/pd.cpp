#include "grsobs/pd.hpp"

#include "grsobs/error.hpp"

#include <cctype>
#include <map>
#include <string>

namespace grsobs::diagram {

namespace {

void validate_labels(const std::vector<std::array<int, 4>>& crossings) {
    const std::size_t n = crossings.size();
    std::map<int, int> uses;
    for (const auto& x : crossings)
        for (int label : x) ++uses[label];
    for (const auto& [label, count] : uses) {
        if (label < 1 || label > static_cast<int>(2 * n))
            throw Error("validate", "edge label " + std::to_string(label) +
                                        " outside 1.." + std::to_string(2 * n));
        if (count != 2)
            throw Error("validate", "edge label " + std::to_string(label) + " appears " +
                                        std::to_string(count) + " times, expected 2");
    }
    if (uses.size() != 2 * n)
        throw Error("validate", "edge labels do not cover 1.." + std::to_string(2 * n));
}

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw Error("parse", std::string("expected '") + c + "' at offset " +
                                     std::to_string(pos));
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw Error("parse", "expected an integer at offset " + std::to_string(start));
        return std::stoi(std::string(text.substr(start, pos - start)));
    }
    bool done() {
        skip_ws();
        return pos == text.size();
    }
};

}  // namespace

PlanarDiagram pd_from_tuples(std::vector<std::array<int, 4>> crossings) {
    validate_labels(crossings);
    return PlanarDiagram{std::move(crossings)};
}

PlanarDiagram parse_pd(std::string_view text) {
    Cursor c{text};
    c.expect('[');
    std::vector<std::array<int, 4>> crossings;
    if (!c.eat(']')) {
        do {
            c.expect('[');
            std::array<int, 4> tuple{};
            for (int k = 0; k < 4; ++k) {
                if (k) c.expect(',');
                tuple[k] = c.integer();
            }
            c.expect(']');
            crossings.push_back(tuple);
        } while (c.eat(','));
        c.expect(']');
    }
    if (!c.done())
        throw Error("parse", "trailing characters after PD code");
    return pd_from_tuples(std::move(crossings));
}

}  // namespace grsobs::diagram
