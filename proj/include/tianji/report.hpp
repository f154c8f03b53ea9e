#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tianji/exact.hpp"
#include "tianji/racing.hpp"

namespace tianji {

enum class Format { text, csv, json };

inline Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format \"" + std::string(name) +
                              "\" (supported: text, csv, json)");
}

/// Decimal rendering of r with `places` fractional digits, exact halves
/// rounded up (away from zero), computed entirely in integers.
inline std::string decimal_string(const Rational& r, int places) {
  if (places < 0) throw std::domain_error("decimal_string: negative precision");
  const bool negative = r.num() < 0;
  Int num = negative ? Int(-r.num()) : r.num();
  Int scale = boost::multiprecision::pow(Int(10), static_cast<unsigned>(places));
  Int rounded = (2 * num * scale + r.den()) / (2 * r.den());
  Int whole = rounded / scale;
  Int frac_part = rounded % scale;
  std::string out = (negative && rounded != 0 ? "-" : "") + whole.str();
  if (places > 0) {
    std::string frac = frac_part.str();
    out += "." + std::string(static_cast<std::size_t>(places) - frac.size(), '0') + frac;
  }
  return out;
}

/// One line of the outcome table, counts plus whole-number percents.
struct TableRow {
  int n = 0;
  Int total;
  Int winning;
  int winning_pct = 0;
  Int drawing;
  int drawing_pct = 0;
  Int losing;
  int losing_pct = 0;
  Rational p_win;
  Rational p_draw;
  Rational p_loss;
};

inline TableRow table_row(int n) {
  OutcomeSummary s = count_outcomes(n);
  TableRow row;
  row.n = n;
  row.winning_pct = percent_half_up(s.p_win);
  row.drawing_pct = percent_half_up(s.p_draw);
  row.losing_pct = percent_half_up(s.p_loss);
  row.total = std::move(s.total);
  row.winning = std::move(s.winning);
  row.drawing = std::move(s.drawing);
  row.losing = std::move(s.losing);
  row.p_win = std::move(s.p_win);
  row.p_draw = std::move(s.p_draw);
  row.p_loss = std::move(s.p_loss);
  return row;
}

inline std::vector<TableRow> table_rows(int max_n) {
  if (max_n < 1) throw std::domain_error("table_rows: max_n must be positive");
  std::vector<TableRow> rows;
  rows.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) rows.push_back(table_row(n));
  return rows;
}

namespace detail {

// Right-aligned columns, two spaces apart, LF endings.
inline std::string layout_columns(const std::vector<std::vector<std::string>>& grid) {
  std::vector<std::size_t> width;
  for (const auto& row : grid) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += "  ";
      out += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    out += "\n";
  }
  return out;
}

inline std::string cell(const Int& count, int pct) {
  return count.str() + " (" + std::to_string(pct) + "%)";
}

}  // namespace detail

/// The outcome table for n = 1..max_n in the requested format. Counts are
/// always full decimal integers; percents use percent_half_up.
inline std::string render_table(int max_n, Format format) {
  const std::vector<TableRow> rows = table_rows(max_n);
  switch (format) {
    case Format::csv: {
      std::string out = "n,total,winning,winning_pct,drawing,drawing_pct,losing,losing_pct\n";
      for (const TableRow& r : rows) {
        out += std::to_string(r.n) + "," + r.total.str() + "," + r.winning.str() + "," +
               std::to_string(r.winning_pct) + "," + r.drawing.str() + "," +
               std::to_string(r.drawing_pct) + "," + r.losing.str() + "," +
               std::to_string(r.losing_pct) + "\n";
      }
      return out;
    }
    case Format::json: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const TableRow& r : rows) {
        // Counts go out as decimal strings: they outgrow every fixed-width
        // JSON number type long before max_n gets interesting.
        doc.push_back({{"n", r.n},
                       {"total", r.total.str()},
                       {"winning", r.winning.str()},
                       {"winning_pct", r.winning_pct},
                       {"drawing", r.drawing.str()},
                       {"drawing_pct", r.drawing_pct},
                       {"losing", r.losing.str()},
                       {"losing_pct", r.losing_pct},
                       {"p_win", {{"num", r.p_win.num().str()}, {"den", r.p_win.den().str()}}},
                       {"p_draw", {{"num", r.p_draw.num().str()}, {"den", r.p_draw.den().str()}}},
                       {"p_loss", {{"num", r.p_loss.num().str()}, {"den", r.p_loss.den().str()}}}});
      }
      return doc.dump(2) + "\n";
    }
    case Format::text: {
      std::vector<std::vector<std::string>> grid;
      grid.push_back({"n", "total", "winning", "drawing", "losing"});
      for (const TableRow& r : rows)
        grid.push_back({std::to_string(r.n), r.total.str(), detail::cell(r.winning, r.winning_pct),
                        detail::cell(r.drawing, r.drawing_pct),
                        detail::cell(r.losing, r.losing_pct)});
      return detail::layout_columns(grid);
    }
  }
  throw std::logic_error("render_table: unhandled format");
}

enum class Parity { odd, even };

inline Parity parse_parity(std::string_view name) {
  if (name == "odd") return Parity::odd;
  if (name == "even") return Parity::even;
  throw std::invalid_argument("unknown parity \"" + std::string(name) +
                              "\" (supported: odd, even)");
}

struct TrendPoint {
  int n = 0;
  Rational p_win;
  Rational p_draw;
  Rational p_loss;
  std::string p_win_str;
  std::string p_draw_str;
  std::string p_loss_str;
};

/// Plot-ready probability trend for one parity. Odd series starts at
/// n = 3 (the first odd case with a nontrivial lineup choice), even at
/// n = 2.
struct TrendSeries {
  Parity parity = Parity::odd;
  int decimal_places = 4;
  std::vector<TrendPoint> points;
};

inline TrendSeries figure_series(Parity parity, int max_n, int decimal_places) {
  if (max_n < 2) throw std::domain_error("figure_series: max_n must be at least 2");
  if (decimal_places < 1) throw std::domain_error("figure_series: decimal_places must be positive");
  TrendSeries series;
  series.parity = parity;
  series.decimal_places = decimal_places;
  const int first = parity == Parity::odd ? 3 : 2;
  for (int n = first; n <= max_n; n += 2) {
    OutcomeSummary s = count_outcomes(n);
    TrendPoint p;
    p.n = n;
    p.p_win_str = decimal_string(s.p_win, decimal_places);
    p.p_draw_str = decimal_string(s.p_draw, decimal_places);
    p.p_loss_str = decimal_string(s.p_loss, decimal_places);
    p.p_win = std::move(s.p_win);
    p.p_draw = std::move(s.p_draw);
    p.p_loss = std::move(s.p_loss);
    series.points.push_back(std::move(p));
  }
  return series;
}

inline std::string render_figures(const TrendSeries& series, Format format) {
  switch (format) {
    case Format::csv: {
      std::string out = "n,p_win,p_draw,p_loss\n";
      for (const TrendPoint& p : series.points)
        out += std::to_string(p.n) + "," + p.p_win_str + "," + p.p_draw_str + "," + p.p_loss_str +
               "\n";
      return out;
    }
    case Format::json: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const TrendPoint& p : series.points) {
        doc.push_back({{"n", p.n},
                       {"p_win", p.p_win_str},
                       {"p_draw", p.p_draw_str},
                       {"p_loss", p.p_loss_str},
                       {"p_win_exact", {{"num", p.p_win.num().str()}, {"den", p.p_win.den().str()}}},
                       {"p_draw_exact",
                        {{"num", p.p_draw.num().str()}, {"den", p.p_draw.den().str()}}},
                       {"p_loss_exact",
                        {{"num", p.p_loss.num().str()}, {"den", p.p_loss.den().str()}}}});
      }
      return doc.dump(2) + "\n";
    }
    case Format::text: {
      std::vector<std::vector<std::string>> grid;
      grid.push_back({"n", "p_win", "p_draw", "p_loss"});
      for (const TrendPoint& p : series.points)
        grid.push_back({std::to_string(p.n), p.p_win_str, p.p_draw_str, p.p_loss_str});
      return detail::layout_columns(grid);
    }
  }
  throw std::logic_error("render_figures: unhandled format");
}

}  // namespace tianji
