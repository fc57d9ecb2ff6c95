#pragma once

#include <deque>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fmq/action.hpp"
#include "fmq/cover.hpp"

namespace fmq {

/// Parse failure at a 1-based line and column.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class EntryKind { surface, cover, vector, action };

std::string_view to_string(EntryKind kind);

struct NamedVector {
  std::string surface;
  ChernCharacter ch;
};

struct CatalogEntry {
  std::string id;
  EntryKind kind;
  std::variant<NumericalSurface, CoverTransfer, NamedVector, GActionLattice> payload;
};

struct LoadOptions {
  bool allow_invalid = false;  // accept covers failing validate_cover
};

/// Id-indexed store of definitions. Later loads may reference ids from
/// earlier ones; ids are unique across all kinds.
class Catalog {
 public:
  /// Parses and validates `text`, appending its entries. Returns the new
  /// entries. On error nothing is added.
  std::vector<CatalogEntry> load(std::string_view text, const LoadOptions& options = {});

  const std::deque<CatalogEntry>& entries() const { return entries_; }
  std::size_t count(EntryKind kind) const;
  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  const CatalogEntry* find(const std::string& id) const;

  /// Throw InputError on unknown id or wrong kind.
  const NumericalSurface& surface(const std::string& id) const;
  const CoverTransfer& cover(const std::string& id) const;
  const NamedVector& vector(const std::string& id) const;
  const GActionLattice& action(const std::string& id) const;

 private:
  const CatalogEntry& lookup(const std::string& id, EntryKind kind) const;

  std::deque<CatalogEntry> entries_;
  std::map<std::string, std::size_t> index_;
};

std::vector<CatalogEntry> load_definitions(std::string_view text, const LoadOptions& options = {});

std::string_view builtin_catalog_text();
/// The shipped catalog, parsed.
const Catalog& builtin_catalog();

/// "[1,0;0,2]" -> rational matrix (used by the CLI for matrix arguments).
RatMat parse_matrix(std::string_view text);

}  // namespace fmq
