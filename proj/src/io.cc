#include "fusionburnside/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "fusionburnside/error.hpp"

namespace fusionburnside {

namespace {

std::string_view trim(std::string_view s)
{
  auto const ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text)
{
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_commas(std::string_view line)
{
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    auto end = line.find(',', start);
    if (end == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, end - start)));
    start = end + 1;
  }
}

} // namespace

GroupSpec parse_group_text(std::string_view text)
{
  GroupSpec spec;
  bool have_degree = false;
  int line_no = 0;
  for (auto raw : split_lines(text)) {
    ++line_no;
    auto line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;

    if (!have_degree) {
      std::istringstream is{std::string(line)};
      std::string keyword;
      int n = 0;
      std::string rest;
      if (!(is >> keyword >> n) || keyword != "degree" || (is >> rest) || n <= 0)
        throw InputError("line " + std::to_string(line_no) +
                         ": expected 'degree n' with n positive");
      spec.degree = n;
      have_degree = true;
      continue;
    }
    try {
      spec.generators.push_back(Permutation::parse_cycles(line, spec.degree));
    } catch (InputError const &e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_degree)
    throw InputError("group file has no 'degree' line");
  return spec;
}

std::string read_text_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GroupSpec read_group_file(std::string const &path)
{ return parse_group_text(read_text_file(path)); }

std::string format_row_csv(std::vector<std::string> const &labels,
                           std::vector<std::int64_t> const &values)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i)
    os << (i ? "," : "") << labels[i];
  os << '\n';
  for (std::size_t i = 0; i < values.size(); ++i)
    os << (i ? "," : "") << values[i];
  os << '\n';
  return os.str();
}

std::vector<std::int64_t> parse_row_csv(std::string_view text,
                                        SubgroupClassTable const &table)
{
  std::vector<std::string_view> lines;
  for (auto line : split_lines(text))
    if (!trim(line).empty())
      lines.push_back(line);
  if (lines.size() != 2)
    throw InputError("element CSV must have a header row and one data row");

  auto header = split_commas(lines[0]);
  auto row = split_commas(lines[1]);
  if (header.size() != row.size())
    throw InputError("element CSV header and data row differ in length");
  if (header.size() != table.size())
    throw InputError("element CSV has " + std::to_string(header.size()) +
                     " columns, class table has " + std::to_string(table.size()));

  std::vector<std::int64_t> values(table.size(), 0);
  std::vector<bool> seen(table.size(), false);
  for (std::size_t i = 0; i < header.size(); ++i) {
    auto idx = table.find_label(std::string(header[i]));
    if (!idx)
      throw InputError("unknown class label '" + std::string(header[i]) + "'");
    if (seen[*idx])
      throw InputError("duplicate class label '" + std::string(header[i]) + "'");
    seen[*idx] = true;
    std::int64_t v = 0;
    auto field = row[i];
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size())
      throw InputError("malformed integer '" + std::string(field) + "'");
    values[*idx] = v;
  }
  return values;
}

} // namespace fusionburnside
