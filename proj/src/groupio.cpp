#include <charconv>
#include <fstream>
#include <sstream>

#include "oddfact/atlas.hpp"

namespace oddfact {

std::string serialize_group(const Group& g) {
  std::ostringstream out;
  out << g.gram.field()->serialize() << "\n";
  out << "DIM " << g.gram.rows() << "\n";
  out << "NAME " << g.name << "\n";
  out << "CLAIMED_ORDER " << (g.claimed_order ? to_string(*g.claimed_order) : std::string("-")) << "\n";
  out << "PROVENANCE " << g.provenance << "\n";
  for (const Mat& m : g.gens) out << m.to_string() << "\n";
  return out.str();
}

Group parse_group(const std::string& text, const Mat* expected_gram) {
  std::istringstream in(text);
  std::string line;
  auto next = [&](const std::string& key) {
    if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "missing " + key + " line");
    if (line.rfind(key, 0) != 0) throw Error(ErrorCode::ParseError, "expected " + key + ", got '" + line + "'");
    return line.size() > key.size() ? line.substr(key.size() + 1) : std::string();
  };
  if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "empty generator file");
  const FieldPtr F = Field::parse(line);
  const std::string dim = next("DIM");
  int n = 0;
  const auto [end, ec] = std::from_chars(dim.data(), dim.data() + dim.size(), n);
  if (ec != std::errc() || end != dim.data() + dim.size() || n <= 0)
    throw Error(ErrorCode::ParseError, "bad DIM '" + dim + "'");
  Group g;
  g.name = next("NAME");
  const std::string claimed = next("CLAIMED_ORDER");
  if (claimed != "-") {
    if (claimed.empty() || claimed.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::ParseError, "bad CLAIMED_ORDER '" + claimed + "'");
    g.claimed_order = BigInt(claimed);
  }
  g.provenance = next("PROVENANCE");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Mat m = Mat::parse(F, line);
    if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::ParseError, "generator is not " + std::to_string(n) + "x" + std::to_string(n));
    g.gens.push_back(std::move(m));
  }
  if (expected_gram) {
    if (!expected_gram->field()->same_as(*F) || expected_gram->rows() != n)
      throw Error(ErrorCode::FieldMismatch, g.name + ": stored generators do not match the ambient space");
    return make_group(g.name, *expected_gram, std::move(g.gens), g.claimed_order, g.provenance);
  }
  g.gram = Mat::identity(F, n);
  return g;
}

Group load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingData, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group(buf.str());
}

void store_group(const Group& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::MissingData, "cannot write " + path);
  out << serialize_group(g);
}

}  // namespace oddfact
