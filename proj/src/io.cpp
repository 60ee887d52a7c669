#include "modseries/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "modseries/error.hpp"

namespace modseries::io {

namespace {

struct Line {
  std::size_t number;  // 1-based, for messages
  std::vector<std::string> tokens;
};

class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string_view raw = text.substr(start, end - start);
      std::istringstream in{std::string(raw)};
      Line line{number, {}};
      for (std::string tok; in >> tok;) line.tokens.push_back(tok);
      if (!line.tokens.empty() && line.tokens.front().front() != '#') lines_.push_back(std::move(line));
      start = end + 1;
    }
  }

  bool done() const { return pos_ == lines_.size(); }
  const Line& peek() const {
    if (done()) throw Error(ErrorKind::parse, "unexpected end of input");
    return lines_[pos_];
  }
  const Line& next() {
    const Line& l = peek();
    ++pos_;
    return l;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

[[noreturn]] void fail_at(const Line& line, const std::string& why) {
  throw Error(ErrorKind::parse, "line " + std::to_string(line.number) + ": " + why);
}

std::int64_t parse_int(const Line& line, const std::string& tok) {
  std::int64_t value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) fail_at(line, "'" + tok + "' is not an integer");
  return value;
}

std::uint64_t parse_count(const Line& line, const std::string& tok) {
  const std::int64_t v = parse_int(line, tok);
  if (v < 0) fail_at(line, "'" + tok + "' is negative");
  return static_cast<std::uint64_t>(v);
}

// Parses `keyword k1=v1 k2=v2 ...` requiring exactly the listed keys in order.
std::map<std::string, std::string> parse_header(const Line& line, const std::string& keyword,
                                                const std::vector<std::string>& keys) {
  if (line.tokens.front() != keyword) fail_at(line, "expected '" + keyword + "' header");
  if (line.tokens.size() != keys.size() + 1)
    fail_at(line, "'" + keyword + "' header needs exactly " + std::to_string(keys.size()) + " fields");
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const std::string& tok = line.tokens[i + 1];
    const std::string prefix = keys[i] + "=";
    if (tok.rfind(prefix, 0) != 0) fail_at(line, "expected field '" + prefix + "...'");
    out[keys[i]] = tok.substr(prefix.size());
  }
  return out;
}

Vec parse_row(const Line& line, FieldSpec field, std::size_t d) {
  if (line.tokens.size() != d)
    fail_at(line, "expected " + std::to_string(d) + " entries, got " + std::to_string(line.tokens.size()));
  Vec v(d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::int64_t e = parse_int(line, line.tokens[i]);
    if (e < 0 || static_cast<std::uint64_t>(e) >= field.modulus())
      fail_at(line, "entry " + line.tokens[i] + " not in [0, " + std::to_string(field.modulus()) + ")");
    v[i] = static_cast<Scalar>(e);
  }
  return v;
}

SubspaceBasis parse_basis_rows(LineReader& reader, const Line& header, std::size_t r, FieldSpec field,
                               std::size_t d) {
  if (r > d) fail_at(header, "dimension " + std::to_string(r) + " exceeds ambient dimension " + std::to_string(d));
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < r; ++i) rows.push_back(parse_row(reader.next(), field, d));
  SubspaceBasis s = SubspaceBasis::span(field, d, rows);
  if (s.dim() != r) fail_at(header, "basis rows are linearly dependent");
  return s;
}

std::string join_row(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

ModuleData parse_module_data(std::string_view text) {
  LineReader reader(text);
  if (reader.done()) throw Error(ErrorKind::parse, "empty module file");
  const Line& header = reader.next();
  auto fields = parse_header(header, "modrep", {"p", "dim", "gens"});
  ModuleData data;
  data.p = parse_count(header, fields["p"]);
  data.dim = parse_count(header, fields["dim"]);
  const std::uint64_t k = parse_count(header, fields["gens"]);
  for (std::uint64_t g = 0; g < k; ++g) {
    RawMatrix m{data.dim, data.dim, {}};
    for (std::size_t r = 0; r < data.dim; ++r) {
      const Line& line = reader.next();
      if (line.tokens.size() != data.dim)
        fail_at(line, "expected " + std::to_string(data.dim) + " entries, got " + std::to_string(line.tokens.size()));
      for (const std::string& tok : line.tokens) m.entries.push_back(parse_int(line, tok));
    }
    data.gens.push_back(std::move(m));
  }
  if (!reader.done()) fail_at(reader.peek(), "trailing content after the last generator");
  return data;
}

ModuleRep parse_module(std::string_view text) { return ModuleRep::from_data(parse_module_data(text)); }

std::string render_module(const ModuleRep& rep) {
  std::string out = "modrep p=" + std::to_string(rep.field().modulus()) + " dim=" + std::to_string(rep.dim()) +
                    " gens=" + std::to_string(rep.gen_count()) + "\n";
  for (const Mat& g : rep.gens()) out += render_matrix(g);
  return out;
}

std::vector<SubspaceBasis> parse_subspaces(std::string_view text, FieldSpec field, std::size_t ambient_dim) {
  LineReader reader(text);
  std::vector<SubspaceBasis> out;
  while (!reader.done()) {
    const Line& header = reader.next();
    auto fields = parse_header(header, "subspace", {"dim"});
    out.push_back(parse_basis_rows(reader, header, parse_count(header, fields["dim"]), field, ambient_dim));
  }
  return out;
}

std::string render_subspace(const SubspaceBasis& s) {
  std::string out = "subspace dim=" + std::to_string(s.dim()) + "\n";
  for (const Vec& r : s.rows()) out += join_row(r) + "\n";
  return out;
}

NormalSeries parse_series(std::string_view text, const ModuleRep& parent) {
  LineReader reader(text);
  if (reader.done()) throw Error(ErrorKind::parse, "empty series file");
  const Line& header = reader.next();
  auto fields = parse_header(header, "series", {"terms"});
  const std::uint64_t n = parse_count(header, fields["terms"]);
  NormalSeries s{parent, {}, {}};
  for (std::uint64_t i = 0; i < n; ++i) {
    const Line& term = reader.next();
    auto tf = parse_header(term, "term", {"label", "dim"});
    try {
      s.labels.push_back(parse_ordinal(tf["label"]));
    } catch (const Error& e) {
      fail_at(term, e.detail());
    }
    s.terms.push_back(parse_basis_rows(reader, term, parse_count(term, tf["dim"]), parent.field(), parent.dim()));
  }
  if (!reader.done()) fail_at(reader.peek(), "trailing content after the last term");
  return s;
}

std::string render_series(const NormalSeries& s) {
  std::string out = "series terms=" + std::to_string(s.length()) + "\n";
  for (std::size_t i = 0; i < s.length(); ++i) {
    out += "term label=" + to_string(s.labels[i]) + " dim=" + std::to_string(s.terms[i].dim()) + "\n";
    for (const Vec& r : s.terms[i].rows()) out += join_row(r) + "\n";
  }
  return out;
}

std::string render_matrix(const Mat& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) out += join_row(m.row(r)) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace modseries::io
