#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace sposet {

// Opaque, immutable identifier of a poset element.
//
// Four shapes exist:
//   Bottom            "0"
//   atom set          sorted vertex names joined by '*'    "b*c"
//   copy              copy index and base label            "2@b*c"
//   class             sorted member labels                 "{0@a,1@a}"
//
// The empty atom set is Bottom.  Vertex names are non-empty, may not be "0"
// and may not contain whitespace or any of "*,{}@".  Labels compare
// structurally (shape first, then contents; atom sets by size first), which
// fixes every output order in the library.
class ElementLabel {
 public:
  enum class Kind { kBottom = 0, kAtomSet = 1, kCopy = 2, kClass = 3 };

  ElementLabel();  // Bottom

  static ElementLabel bottom() { return ElementLabel(); }
  static ElementLabel atom_set(std::vector<std::string> vertices);
  static ElementLabel vertex(std::string name);
  static ElementLabel copy(std::size_t index, ElementLabel base);
  static ElementLabel class_of(std::vector<ElementLabel> members);

  // Inverse of str().  Throws ParseError.
  static ElementLabel parse(std::string_view text);

  static bool valid_vertex_name(std::string_view name);

  Kind kind() const noexcept;
  bool is_bottom() const noexcept { return kind() == Kind::kBottom; }

  // Atom sets only (empty for Bottom).
  const std::vector<std::string>& vertices() const;
  // Copies only.
  std::size_t copy_index() const;
  const ElementLabel& base() const;
  // Classes only.
  const std::vector<ElementLabel>& members() const;

  std::string str() const;

  friend std::strong_ordering operator<=>(const ElementLabel& a,
                                          const ElementLabel& b);
  friend bool operator==(const ElementLabel& a, const ElementLabel& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  struct Node;
  explicit ElementLabel(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const ElementLabel& label);

}  // namespace sposet
