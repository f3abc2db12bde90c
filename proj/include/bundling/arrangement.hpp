#ifndef BUNDLING_ARRANGEMENT_HPP
#define BUNDLING_ARRANGEMENT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bundling {

enum class Color { none, blue, red };

const char* color_name(Color c);

/// A string (pseudosegment candidate) given combinatorially by the ordered
/// sequence of crossings met while traversing it. A closed string has no
/// endpoints; its crossing sequence is read cyclically.
struct StringCurve {
    int id = -1;
    Color color = Color::none;
    std::vector<int> crossings;
    bool closed = false;
};

/// A crossing joins exactly two strings; the sign fixes the local rotation
/// (+1: counterclockwise a_in, b_in, a_out, b_out; -1: the mirror).
struct Crossing {
    int id = -1;
    int string_a = -1;
    int string_b = -1;
    int sign = +1;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Arrangement {
    std::vector<StringCurve> strings;   // sorted by id
    std::vector<Crossing> crossings;    // sorted by id
    std::vector<std::string> warnings;  // e.g. dropped uncrossed strings

    int string_index(int id) const;    // -1 when absent
    int crossing_index(int id) const;  // -1 when absent

    bool is_colored() const;  // every string carries blue or red
};

/// Parse the canonical JSON instance format. Referential integrity is
/// checked; uncrossed strings are dropped with a warning.
Arrangement parse_instance(const std::string& text);

/// Canonical serialization (stable key order, arrays in id order).
std::string to_json(const Arrangement& arr);

/// Partition by connectivity of the union of strings.
std::vector<Arrangement> split_components(const Arrangement& arr);

}  // namespace bundling

#endif
