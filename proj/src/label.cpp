#include "sposet/label.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "sposet/error.hpp"

namespace sposet {

struct ElementLabel::Node {
  Kind kind = Kind::kBottom;
  std::vector<std::string> vertices;
  std::size_t index = 0;
  std::vector<ElementLabel> children;  // copy base (one entry) or members
};

ElementLabel::ElementLabel() {
  static const auto bottom_node = std::make_shared<const Node>();
  node_ = bottom_node;
}

ElementLabel::ElementLabel(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

bool ElementLabel::valid_vertex_name(std::string_view name) {
  if (name.empty() || name == "0") return false;
  for (char c : name) {
    if (c == '*' || c == ',' || c == '{' || c == '}' || c == '@' ||
        c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      return false;
    }
  }
  return true;
}

ElementLabel ElementLabel::atom_set(std::vector<std::string> vertices) {
  if (vertices.empty()) return bottom();
  for (const auto& v : vertices) {
    if (!valid_vertex_name(v)) {
      throw ParseError("invalid vertex name '" + v + "'");
    }
  }
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw ParseError("repeated vertex in atom-set label");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::kAtomSet;
  node->vertices = std::move(vertices);
  return ElementLabel(std::move(node));
}

ElementLabel ElementLabel::vertex(std::string name) {
  return atom_set({std::move(name)});
}

ElementLabel ElementLabel::copy(std::size_t index, ElementLabel base) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kCopy;
  node->index = index;
  node->children.push_back(std::move(base));
  return ElementLabel(std::move(node));
}

ElementLabel ElementLabel::class_of(std::vector<ElementLabel> members) {
  if (members.empty()) throw ParseError("class label needs members");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw ParseError("repeated member in class label");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::kClass;
  node->children = std::move(members);
  return ElementLabel(std::move(node));
}

ElementLabel::Kind ElementLabel::kind() const noexcept { return node_->kind; }

const std::vector<std::string>& ElementLabel::vertices() const {
  return node_->vertices;
}

std::size_t ElementLabel::copy_index() const {
  if (kind() != Kind::kCopy) throw DomainError("label is not a copy label");
  return node_->index;
}

const ElementLabel& ElementLabel::base() const {
  if (kind() != Kind::kCopy) throw DomainError("label is not a copy label");
  return node_->children.front();
}

const std::vector<ElementLabel>& ElementLabel::members() const {
  if (kind() != Kind::kClass) throw DomainError("label is not a class label");
  return node_->children;
}

std::string ElementLabel::str() const {
  switch (kind()) {
    case Kind::kBottom:
      return "0";
    case Kind::kAtomSet: {
      std::string out;
      for (std::size_t i = 0; i < node_->vertices.size(); ++i) {
        if (i != 0) out += '*';
        out += node_->vertices[i];
      }
      return out;
    }
    case Kind::kCopy:
      return std::to_string(node_->index) + "@" + node_->children[0].str();
    case Kind::kClass: {
      std::string out = "{";
      for (std::size_t i = 0; i < node_->children.size(); ++i) {
        if (i != 0) out += ',';
        out += node_->children[i].str();
      }
      out += '}';
      return out;
    }
  }
  return {};
}

ElementLabel ElementLabel::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty label");
  if (text == "0") return bottom();

  if (text.front() == '{') {
    if (text.back() != '}') throw ParseError("unterminated class label");
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<ElementLabel> members;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || (body[i] == ',' && depth == 0)) {
        members.push_back(parse(body.substr(start, i - start)));
        start = i + 1;
      } else if (body[i] == '{') {
        ++depth;
      } else if (body[i] == '}') {
        if (--depth < 0) throw ParseError("unbalanced braces in label");
      }
    }
    if (depth != 0) throw ParseError("unbalanced braces in label");
    return class_of(std::move(members));
  }

  const auto at = text.find('@');
  if (at != std::string_view::npos) {
    std::size_t index = 0;
    const auto* first = text.data();
    const auto* last = text.data() + at;
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (at == 0 || ec != std::errc{} || ptr != last) {
      throw ParseError("malformed copy label '" + std::string(text) + "'");
    }
    return copy(index, parse(text.substr(at + 1)));
  }

  std::vector<std::string> vertices;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '*') {
      vertices.emplace_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return atom_set(std::move(vertices));
}

std::strong_ordering operator<=>(const ElementLabel& a, const ElementLabel& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  const auto& na = *a.node_;
  const auto& nb = *b.node_;
  switch (na.kind) {
    case ElementLabel::Kind::kBottom:
      return std::strong_ordering::equal;
    case ElementLabel::Kind::kAtomSet:
      if (auto c = na.vertices.size() <=> nb.vertices.size(); c != 0) return c;
      return na.vertices <=> nb.vertices;
    case ElementLabel::Kind::kCopy:
      if (auto c = na.index <=> nb.index; c != 0) return c;
      return na.children[0] <=> nb.children[0];
    case ElementLabel::Kind::kClass:
      return std::lexicographical_compare_three_way(
          na.children.begin(), na.children.end(), nb.children.begin(),
          nb.children.end());
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ElementLabel& label) {
  return os << label.str();
}

}  // namespace sposet
