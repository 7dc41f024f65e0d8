#include "fdlat/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "fdlat/estimates.hpp"
#include "fdlat/parallel.hpp"

namespace fdlat {

std::string ScientificString::str() const {
  if (exponent == 0) return mantissa;
  return mantissa + "e" + std::to_string(exponent);
}

Natural ScientificString::digits() const {
  std::string raw;
  for (char c : mantissa)
    if (c != '.') raw.push_back(c);
  return parse_natural(raw);
}

namespace {

// Mantissa text for a sig-digit integer q in [10^(sig-1), 10^sig).
std::string place_point(const Natural& q) {
  std::string text = q.get_str();
  if (text.size() > 1) text.insert(1, ".");
  return text;
}

std::int64_t decimal_length(const Natural& x) {
  // mpz_sizeinbase may overshoot by one for base 10.
  auto len = static_cast<std::int64_t>(mpz_sizeinbase(x.get_mpz_t(), 10));
  if (len > 1 && x < pow10(static_cast<unsigned>(len - 1))) --len;
  return len;
}

}  // namespace

ScientificString format_scientific(const Natural& x, int sig) {
  if (sig < 1) throw ConstraintError("format_scientific: sig must be >= 1");
  if (x < 0) throw ConstraintError("format_scientific: negative value");
  if (x == 0) return {"0", 0};
  return format_ratio(x, Natural(1), sig);
}

ScientificString format_ratio(const Natural& num, const Natural& den, int sig) {
  if (sig < 1) throw ConstraintError("format_ratio: sig must be >= 1");
  if (num <= 0 || den <= 0) throw ConstraintError("format_ratio: operands must be positive");

  // Exponent e with 10^e <= num/den < 10^(e+1), starting from a guess off
  // by at most one.
  std::int64_t e = decimal_length(num) - decimal_length(den);
  auto scaled_compare = [&](std::int64_t exponent) {
    // sign of num - den * 10^exponent
    if (exponent >= 0) return cmp(num, den * pow10(static_cast<unsigned>(exponent)));
    return cmp(num * pow10(static_cast<unsigned>(-exponent)), den);
  };
  if (scaled_compare(e) < 0) --e;

  // q = floor(num * 10^(sig-1-e) / den), then round half up.
  const std::int64_t shift = sig - 1 - e;
  Natural top = num, bottom = den;
  if (shift >= 0)
    top *= pow10(static_cast<unsigned>(shift));
  else
    bottom *= pow10(static_cast<unsigned>(-shift));
  Natural q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), bottom.get_mpz_t());
  if (2 * rem >= bottom) ++q;
  if (q == pow10(static_cast<unsigned>(sig))) {
    q = pow10(static_cast<unsigned>(sig - 1));
    ++e;
  }
  return {place_point(q), e};
}

std::string to_string(TableId id) {
  switch (id) {
    case TableId::kT51: return "t51";
    case TableId::kT52: return "t52";
    case TableId::kT53: return "t53";
    case TableId::kT54: return "t54";
    case TableId::kT55: return "t55";
  }
  return "?";
}

TableId parse_table_id(const std::string& text) {
  for (auto id : {TableId::kT51, TableId::kT52, TableId::kT53, TableId::kT54, TableId::kT55})
    if (to_string(id) == text) return id;
  throw ConstraintError("unknown table id '" + text + "' (expected t51..t55)");
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::kText;
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw ConstraintError("unknown format '" + text + "' (expected text, csv or json)");
}

std::string to_string(Column column) {
  switch (column) {
    case Column::kFlat: return "flat";
    case Column::kGStar: return "g_star";
    case Column::kGDoubleStar: return "g_doublestar";
    case Column::kGUpper: return "g_upper";
  }
  return "?";
}

TableSpec TableSpec::standard(TableId id) {
  switch (id) {
    case TableId::kT51:
      return {id, 3, 3, 20, {Column::kFlat, Column::kGStar, Column::kGDoubleStar, Column::kGUpper}, 0, 0};
    case TableId::kT52: return {id, 4, 4, 21, {Column::kFlat, Column::kGUpper}, 0, 0};
    case TableId::kT53: return {id, 5, 5, 22, {Column::kFlat, Column::kGUpper}, 0, 0};
    case TableId::kT54: return {id, 3, 298, 300, {Column::kFlat, Column::kGDoubleStar}, 7, 10};
    case TableId::kT55: return {id, 20, 5999, 6000, {Column::kFlat, Column::kGUpper}, 13, 0};
  }
  throw ConstraintError("unknown table id");
}

namespace {

Natural column_value(Column column, std::int64_t r, std::int64_t n) {
  switch (column) {
    case Column::kFlat: return flat_lower(r, n);
    case Column::kGStar: return g3_star(n);
    case Column::kGDoubleStar: return g3_doublestar(n);
    case Column::kGUpper: return g_upper(r, n);
  }
  return 0;
}

}  // namespace

std::vector<TableRow> compute_table(const TableSpec& spec, unsigned jobs) {
  if (spec.n_lo > spec.n_hi) throw ConstraintError("compute_table: empty n range");
  const auto count = static_cast<std::size_t>(spec.n_hi - spec.n_lo + 1);
  return parallel_map(count, jobs, [&](std::size_t i) {
    TableRow row;
    row.n = spec.n_lo + static_cast<std::int64_t>(i);
    for (auto column : spec.columns) row.values[column] = column_value(column, spec.r, row.n);
    if (spec.ratio_sig > 0)
      row.ratio = format_ratio(row.values.at(Column::kGDoubleStar), row.values.at(Column::kFlat), spec.ratio_sig);
    return row;
  });
}

std::string render_table(const TableSpec& spec, const std::vector<TableRow>& rows, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::kJson: {
      for (const auto& row : rows) {
        nlohmann::ordered_json line;
        line["table"] = to_string(spec.id);
        line["r"] = spec.r;
        line["n"] = row.n;
        for (auto column : spec.columns) {
          line[to_string(column)] = row.values.at(column).get_str();
          if (spec.sig > 0) line[to_string(column) + "_sci"] = format_scientific(row.values.at(column), spec.sig).str();
        }
        if (row.ratio) line["ratio"] = row.ratio->str();
        out << line.dump() << "\n";
      }
      break;
    }
    case Format::kCsv: {
      out << "n";
      for (auto column : spec.columns) {
        out << "," << to_string(column);
        if (spec.sig > 0) out << "," << to_string(column) << "_sci";
      }
      if (spec.ratio_sig > 0) out << ",ratio";
      out << "\n";
      for (const auto& row : rows) {
        out << row.n;
        for (auto column : spec.columns) {
          out << "," << row.values.at(column).get_str();
          if (spec.sig > 0) out << "," << format_scientific(row.values.at(column), spec.sig).str();
        }
        if (row.ratio) out << "," << row.ratio->str();
        out << "\n";
      }
      break;
    }
    case Format::kText: {
      // Exact integers for the small tables, rounded scientific otherwise.
      std::vector<std::vector<std::string>> cells;
      std::vector<std::string> header = {"n"};
      for (auto column : spec.columns) header.push_back(to_string(column));
      if (spec.ratio_sig > 0) header.push_back("ratio");
      cells.push_back(header);
      for (const auto& row : rows) {
        std::vector<std::string> line = {std::to_string(row.n)};
        for (auto column : spec.columns) {
          const auto& value = row.values.at(column);
          line.push_back(spec.sig > 0 ? format_scientific(value, spec.sig).str() : value.get_str());
        }
        if (row.ratio) line.push_back(row.ratio->str());
        cells.push_back(std::move(line));
      }
      std::vector<std::size_t> width(header.size(), 0);
      for (const auto& line : cells)
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
      for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
          if (c > 0) out << "  ";
          out << std::string(width[c] - line[c].size(), ' ') << line[c];
        }
        out << "\n";
      }
      break;
    }
  }
  return out.str();
}

std::string emit_table(const TableSpec& spec, Format format, unsigned jobs) {
  return render_table(spec, compute_table(spec, jobs), format);
}

}  // namespace fdlat
