#include "blockerlab/serialization.hpp"

#include <cctype>
#include <charconv>

namespace blockerlab {

using nlohmann::json;

namespace {

class EdgeListLexer {
 public:
  explicit EdgeListLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  std::size_t pos() const { return pos_; }

  int integer() {
    skip_space();
    int value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) throw ParseError("expected a vertex number", pos_);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

int int_field(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> list_field(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  const json& v = j.at(key);
  if (!v.is_array()) throw std::invalid_argument(std::string("field \"") + key + "\" must be an array");
  std::vector<int> out;
  for (const json& x : v) {
    if (!x.is_number_integer())
      throw std::invalid_argument(std::string("field \"") + key + "\" must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

EdgeSet parse_edge_list(int n, std::string_view text) {
  EdgeListLexer lex(text);
  std::vector<Edge> edges;
  if (!lex.done()) {
    while (true) {
      const std::size_t at = lex.pos();
      const int u = lex.integer();
      lex.expect('-');
      const int v = lex.integer();
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError("vertex out of range for n=" + std::to_string(n), at);
      if (u == v) throw ParseError("edge endpoints must differ", at);
      edges.emplace_back(u, v);
      if (lex.done()) break;
      lex.expect(',');
    }
  }
  return EdgeSet(n, std::move(edges));
}

std::string format_edge_list(const EdgeSet& s) {
  std::string out;
  for (const Edge& e : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.a) + '-' + std::to_string(e.b);
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

json to_json(const EdgeSet& s) {
  json edges = json::array();
  for (const Edge& e : s) edges.push_back({e.a, e.b});
  return {{"n", s.order()}, {"edges", std::move(edges)}};
}

EdgeSet edge_set_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("edge set must be a JSON object");
  const int n = int_field(j, "n");
  if (!j.contains("edges") || !j.at("edges").is_array())
    throw std::invalid_argument("edge set needs an \"edges\" array");
  std::vector<Edge> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw std::invalid_argument("each edge must be a pair of integers");
    const int u = e[0].get<int>();
    const int v = e[1].get<int>();
    if (u == v) throw std::invalid_argument("edge endpoints must differ");
    edges.emplace_back(u, v);
  }
  return EdgeSet(n, std::move(edges));
}

json to_json(const Path& p) { return json(std::vector<int>(p.vertices().begin(), p.vertices().end())); }

json to_json(const BlockerDescriptor& d) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        json j = {{"m", p.m}, {"k", p.k}, {"alpha", p.alpha}, {"delta", p.delta}};
        if constexpr (std::is_same_v<T, ClassAParams>) {
          j["class"] = "A";
        } else {
          j["class"] = "B";
          j["beta"] = p.beta;
          j["gamma"] = p.gamma;
          j["eta"] = p.eta;
        }
        j["eps"] = p.eps;
        j["xi"] = p.xi;
        return j;
      },
      d);
}

BlockerDescriptor descriptor_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("descriptor must be a JSON object");
  if (!j.contains("class") || !j.at("class").is_string())
    throw std::invalid_argument("descriptor needs \"class\": \"A\" or \"B\"");
  const std::string cls = j.at("class").get<std::string>();
  if (cls == "A") {
    return ClassAParams{int_field(j, "m"),     int_field(j, "k"),    int_field(j, "alpha"),
                        int_field(j, "delta"), list_field(j, "eps"), list_field(j, "xi")};
  }
  if (cls == "B") {
    const int m = int_field(j, "m");
    const int alpha = int_field(j, "alpha");
    const int beta = int_field(j, "beta");
    const int delta = int_field(j, "delta");
    const int gamma = j.contains("gamma") ? int_field(j, "gamma") : m - alpha - beta - delta - 1;
    return ClassBParams{m,     int_field(j, "k"), alpha, beta, gamma, delta, int_field(j, "eta"),
                        list_field(j, "eps"), list_field(j, "xi")};
  }
  throw std::invalid_argument("descriptor class must be \"A\" or \"B\"");
}

json to_json(const CharacterizationReport& r) {
  json missing = json::array();
  for (const EdgeSet& s : r.missing_from_parametric) missing.push_back(to_json(s)["edges"]);
  json extra = json::array();
  for (const EdgeSet& s : r.extra_in_parametric) extra.push_back(to_json(s)["edges"]);
  return {{"n", r.n},
          {"method", oracle_name(r.method)},
          {"count_oracle", r.count_oracle},
          {"count_parametric", r.count_parametric},
          {"agreement", r.agreement},
          {"missing_from_parametric", std::move(missing)},
          {"extra_in_parametric", std::move(extra)},
          {"class_a_descriptors", r.class_a_descriptors},
          {"class_b_descriptors", r.class_b_descriptors},
          {"class_a_sets", r.class_a_sets},
          {"class_b_sets", r.class_b_sets},
          {"descriptor_collisions", r.descriptor_collisions},
          {"theorem_holds", r.theorem_holds()}};
}

json to_json(const MinBlockingResult& r) {
  json j = {{"n", r.n}, {"computed", r.computed()}, {"candidates", r.candidates}};
  j["size"] = r.size ? json(*r.size) : json(nullptr);
  if (r.example) j["example"] = to_json(*r.example)["edges"];
  return j;
}

}  // namespace blockerlab
