#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/partitions.hpp"
#include "hecke/skew.hpp"

namespace hecke {

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, const char* what) {
    std::vector<int> out;
    std::size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    skip_spaces();
    if (pos == text.size()) return out;
    while (true) {
        skip_spaces();
        int value = 0;
        const char* begin = text.data() + pos;
        auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == begin)
            throw ParseError(std::string(what) + ": expected an integer in '" +
                             std::string(text) + "'");
        pos = static_cast<std::size_t>(ptr - text.data());
        out.push_back(value);
        skip_spaces();
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw ParseError(std::string(what) + ": expected ',' in '" + std::string(text) + "'");
        ++pos;
    }
    return out;
}

}  // namespace detail

// "3,2,1" -> (3,2,1); "" -> the empty partition.
inline Partition parse_partition(std::string_view text) {
    try {
        return Partition(detail::parse_int_list(text, "partition"));
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("partition '") + std::string(text) + "': " + e.what());
    }
}

inline Composition parse_composition(std::string_view text) {
    try {
        return Composition(detail::parse_int_list(text, "composition"));
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("composition '") + std::string(text) + "': " + e.what());
    }
}

// "2,1|3" -> alpha (2,1), beta (3). Either side may be empty.
inline Bicomposition parse_bicomposition(std::string_view text) {
    const std::size_t bar = text.find('|');
    if (bar == std::string_view::npos)
        throw ParseError("weight '" + std::string(text) + "': expected 'rows|columns'");
    if (text.find('|', bar + 1) != std::string_view::npos)
        throw ParseError("weight '" + std::string(text) + "': more than one '|'");
    return {parse_composition(text.substr(0, bar)), parse_composition(text.substr(bar + 1))};
}

// "3,2/1" -> the skew diagram (3,2)/(1); "3,2" -> the straight diagram.
inline SkewDiagram parse_skew(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return SkewDiagram::straight(parse_partition(text));
    if (text.find('/', slash + 1) != std::string_view::npos)
        throw ParseError("shape '" + std::string(text) + "': more than one '/'");
    Partition outer = parse_partition(text.substr(0, slash));
    Partition inner = parse_partition(text.substr(slash + 1));
    try {
        return SkewDiagram::from_partitions(outer, inner);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("shape '") + std::string(text) + "': " + e.what());
    }
}

inline std::string format_partition(const Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (int i = 1; i <= p.length(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(p.part(i));
    }
    return out;
}

inline std::string format_composition(const Composition& c) {
    std::string out;
    for (int i = 1; i <= c.length(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(c.part(i));
    }
    return out;
}

// Inverse of parse_bicomposition: "2,1|3".
inline std::string format_bicomposition(const Bicomposition& w) {
    return format_composition(w.alpha) + "|" + format_composition(w.beta);
}

}  // namespace hecke
