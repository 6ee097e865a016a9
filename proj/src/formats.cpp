#include "afenum/formats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "afenum/errors.hpp"

namespace afenum {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',';
  });
}

// Collects declarations in order and attacks by name, then builds.
struct Builder {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  struct PendingArc {
    std::string from, to;
    std::size_t line;
  };
  std::vector<PendingArc> pending;

  void declare(std::string name) {
    if (index.count(name)) return;
    index.emplace(name, static_cast<Vertex>(labels.size()));
    labels.push_back(std::move(name));
  }
  Framework build() {
    std::vector<Arc> arcs;
    arcs.reserve(pending.size());
    for (const auto& a : pending) {
      auto f = index.find(a.from), t = index.find(a.to);
      if (f == index.end()) throw SemanticError("attack uses undeclared argument '" + a.from + "'", a.line);
      if (t == index.end()) throw SemanticError("attack uses undeclared argument '" + a.to + "'", a.line);
      arcs.push_back({f->second, t->second});
    }
    return Framework(std::move(labels), arcs);
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Framework parse_apx(std::string_view text) {
  Builder b;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto pct = line.find('%'); pct != std::string_view::npos) line = line.substr(0, pct);
    while (true) {
      line = trim(line);
      if (line.empty()) break;
      const auto open = line.find('(');
      const auto close = line.find(')');
      if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw ParseError("expected arg(NAME). or att(A,B).", line_no);
      const std::string_view keyword = trim(line.substr(0, open));
      const std::string_view inside = line.substr(open + 1, close - open - 1);
      std::string_view rest = trim(line.substr(close + 1));
      if (rest.empty() || rest.front() != '.') throw ParseError("missing '.' after statement", line_no);
      line = rest.substr(1);

      if (keyword == "arg") {
        const auto name = trim(inside);
        if (!valid_name(name)) throw ParseError("bad argument name '" + std::string(inside) + "'", line_no);
        b.declare(std::string(name));
      } else if (keyword == "att") {
        const auto comma = inside.find(',');
        if (comma == std::string_view::npos) throw ParseError("att needs two arguments", line_no);
        const auto from = trim(inside.substr(0, comma)), to = trim(inside.substr(comma + 1));
        if (!valid_name(from) || !valid_name(to))
          throw ParseError("bad attack 'att(" + std::string(inside) + ")'", line_no);
        b.pending.push_back({std::string(from), std::string(to), line_no});
      } else {
        throw ParseError("unknown statement '" + std::string(keyword) + "'", line_no);
      }
    }
  }
  return b.build();
}

Framework parse_tgf(std::string_view text) {
  Builder b;
  bool edges = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::string first, second;
    if (!(ls >> first)) continue;
    if (first == "#") {
      if (edges) throw ParseError("second '#' separator", line_no);
      edges = true;
      continue;
    }
    if (!edges) {
      b.declare(first);  // anything after the ID is a display label
    } else {
      if (!(ls >> second)) throw ParseError("edge line needs two node IDs", line_no);
      b.pending.push_back({first, second, line_no});
    }
  }
  return b.build();
}

std::string write_apx(const Framework& af) {
  std::ostringstream out;
  for (const auto& l : af.labels()) out << "arg(" << l << ").\n";
  for (const Arc& a : af.arcs()) out << "att(" << af.label(a.from) << ',' << af.label(a.to) << ").\n";
  return out.str();
}

std::string write_tgf(const Framework& af) {
  std::ostringstream out;
  for (const auto& l : af.labels()) out << l << '\n';
  out << "#\n";
  for (const Arc& a : af.arcs()) out << af.label(a.from) << ' ' << af.label(a.to) << '\n';
  return out.str();
}

Framework parse_framework(std::string_view text, FileFormat format) {
  return format == FileFormat::Apx ? parse_apx(text) : parse_tgf(text);
}

std::optional<FileFormat> format_from_name(std::string_view name) {
  if (name == "apx") return FileFormat::Apx;
  if (name == "tgf") return FileFormat::Tgf;
  return std::nullopt;
}

std::optional<FileFormat> format_from_path(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  std::string ext(path.substr(dot + 1));
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return format_from_name(ext);
}

Framework load_framework(const std::string& path, std::optional<FileFormat> format) {
  if (!format) format = format_from_path(path);
  if (!format) throw InputError("cannot tell the format of '" + path + "'; pass --format apx|tgf");
  return parse_framework(slurp(path), *format);
}

std::vector<std::vector<std::string>> labelled_extensions(const Framework& af, const std::vector<Extension>& exts) {
  std::vector<std::vector<std::string>> out;
  out.reserve(exts.size());
  for (const auto& e : exts) {
    std::vector<std::string> names;
    e.for_each([&](Vertex v) { names.push_back(af.label(v)); });
    std::sort(names.begin(), names.end());
    out.push_back(std::move(names));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::string format_extension(const std::vector<std::string>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ',';
    s += labels[i];
  }
  s += '}';
  return s;
}

}  // namespace afenum
