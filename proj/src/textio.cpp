#include "holey/textio.hpp"

#include <charconv>
#include <cstdio>

#include "holey/error.hpp"
#include "holey/metrics.hpp"

namespace holey {

std::string serialize(const Polyomino& p) {
    std::string out = "polyomino v1 " + std::to_string(p.size()) + "\n";
    for (Cell c : p.cells()) {
        out += std::to_string(c.x);
        out += ' ';
        out += std::to_string(c.y);
        out += '\n';
    }
    return out;
}

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::int64_t parse_int(std::string_view s, int line) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) fail(line, "expected integer");
    return v;
}

}  // namespace

Polyomino parse(const std::string& text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) fail(static_cast<int>(lines.size() + 1), "missing LF");
        lines.push_back(std::string_view(text).substr(pos, nl - pos));
        pos = nl + 1;
    }
    if (lines.empty()) fail(1, "empty input");

    constexpr std::string_view kMagic = "polyomino v1 ";
    if (!lines[0].starts_with(kMagic)) fail(1, "expected 'polyomino v1 <n>' header");
    std::int64_t n = parse_int(lines[0].substr(kMagic.size()), 1);
    if (n < 1) fail(1, "cell count must be positive");
    if (static_cast<std::int64_t>(lines.size()) != n + 1)
        fail(static_cast<int>(lines.size()), "expected exactly " + std::to_string(n) + " cell lines");

    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const int line = static_cast<int>(i + 2);
        std::string_view s = lines[static_cast<std::size_t>(i + 1)];
        std::size_t sp = s.find(' ');
        if (sp == std::string_view::npos) fail(line, "expected '<x> <y>'");
        std::int64_t x = parse_int(s.substr(0, sp), line);
        std::int64_t y = parse_int(s.substr(sp + 1), line);
        if (x < 0 || y < 0 || x > INT32_MAX || y > INT32_MAX)
            fail(line, "coordinates must be normalized 32-bit integers");
        Cell c{static_cast<std::int32_t>(x), static_cast<std::int32_t>(y)};
        if (!cells.empty() && !(cells.back() < c)) fail(line, "cells not in canonical (y, x) order");
        cells.push_back(c);
    }

    Polyomino p = Polyomino::from_cells(cells);
    // from_cells re-translates, so a shifted input shows up as a mismatch.
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!(p.cells()[i] == cells[i]))
            fail(static_cast<int>(i + 2), "coordinates not normalized to min x = 0, min y = 0");
    }
    return p;
}

std::string render_ascii(const Polyomino& p) {
    const Raster r(p);
    std::string out;
    out.reserve(static_cast<std::size_t>(p.width() + 1) * p.height());
    for (std::int32_t y = p.height() - 1; y >= 0; --y) {
        for (std::int32_t x = 0; x < p.width(); ++x)
            out += r.occupied(x + 1, y + 1) ? '#' : '.';
        out += '\n';
    }
    return out;
}

std::string render_svg(const Polyomino& p) {
    constexpr int kUnit = 10;
    const std::int64_t w = static_cast<std::int64_t>(p.width()) * kUnit;
    const std::int64_t h = static_cast<std::int64_t>(p.height()) * kUnit;
    const std::int32_t maxy = p.height() - 1;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
           "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " +
           std::to_string(h) + "\">\n";
    for (Cell c : p.cells()) {
        out += "<rect x=\"" + std::to_string(c.x * kUnit) + "\" y=\"" +
               std::to_string((maxy - c.y) * kUnit) + "\" width=\"10\" height=\"10\" fill=\"#9a9a9a\"/>\n";
    }
    // Perimeter edges only; holes stay unfilled.
    const Raster r(p);
    auto line = [&](std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2) {
        out += "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) + "\" x2=\"" +
               std::to_string(x2) + "\" y2=\"" + std::to_string(y2) +
               "\" stroke=\"#000\" stroke-width=\"1\"/>\n";
    };
    for (Cell c : p.cells()) {
        const std::int64_t x0 = static_cast<std::int64_t>(c.x) * kUnit;
        const std::int64_t ytop = static_cast<std::int64_t>(maxy - c.y) * kUnit;
        const std::int32_t rx = c.x + 1, ry = c.y + 1;
        if (!r.occupied(rx - 1, ry)) line(x0, ytop, x0, ytop + kUnit);
        if (!r.occupied(rx + 1, ry)) line(x0 + kUnit, ytop, x0 + kUnit, ytop + kUnit);
        if (!r.occupied(rx, ry + 1)) line(x0, ytop, x0 + kUnit, ytop);
        if (!r.occupied(rx, ry - 1)) line(x0, ytop + kUnit, x0 + kUnit, ytop + kUnit);
    }
    out += "</svg>\n";
    return out;
}

}  // namespace holey
