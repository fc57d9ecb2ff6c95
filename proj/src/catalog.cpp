#include "fmq/catalog.hpp"

#include <cctype>
#include <optional>
#include <set>

#include "fmq/catalog_text.hpp"

namespace fmq {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                 message),
      line_(line), column_(column) {}

std::string_view to_string(EntryKind kind) {
  switch (kind) {
    case EntryKind::surface: return "surface";
    case EntryKind::cover: return "cover";
    case EntryKind::vector: return "vector";
    case EntryKind::action: return "action";
  }
  return "?";
}

namespace {

enum class Tok { ident, number, lbrace, rbrace, lbracket, rbracket, semicolon, comma, newline, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::newline: return "end of line";
    case Tok::end: return "end of input";
    default: return "'" + t.text + "'";
  }
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    i += k;
    col += k;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      out.push_back({Tok::newline, "\n", line, col});
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const std::size_t start = i, start_col = col;
    auto single = [&](Tok kind) {
      out.push_back({kind, std::string(1, c), line, col});
      advance(1);
    };
    switch (c) {
      case '{': single(Tok::lbrace); continue;
      case '}': single(Tok::rbrace); continue;
      case '[': single(Tok::lbracket); continue;
      case ']': single(Tok::rbracket); continue;
      case ';': single(Tok::semicolon); continue;
      case ',': single(Tok::comma); continue;
      default: break;
    }
    if (ident_start(c)) {
      while (i < src.size() && ident_char(src[i])) advance(1);
      out.push_back({Tok::ident, std::string(src.substr(start, i - start)), line, start_col});
      continue;
    }
    auto signed_digits = [&] {
      if (i < src.size() && (src[i] == '-' || src[i] == '+')) advance(1);
      if (i >= src.size() || !digit(src[i]))
        throw ParseError(line, col, "malformed number");
      while (i < src.size() && digit(src[i])) advance(1);
    };
    if (digit(c) || c == '-' || c == '+') {
      signed_digits();
      if (i < src.size() && src[i] == '/') {
        advance(1);
        signed_digits();
      }
      out.push_back({Tok::number, std::string(src.substr(start, i - start)), line, start_col});
      continue;
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

struct Field {
  std::string key;
  std::vector<Token> values;
  std::size_t line;
  std::size_t col;
};

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  void skip_newlines() {
    while (peek().kind == Tok::newline) ++pos_;
  }
  const Token& expect(Tok kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind) throw ParseError(t.line, t.col, "expected " + what + ", got " + describe(t));
    return next();
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---- value interpretation ----------------------------------------------

[[noreturn]] void fail_at(const Token& t, const std::string& message) {
  throw ParseError(t.line, t.col, message);
}

[[noreturn]] void fail_at(const Field& f, const std::string& message) {
  throw ParseError(f.line, f.col, message);
}

const Token& single_value(const Field& f, Tok kind, const std::string& what) {
  if (f.values.size() != 1 || f.values[0].kind != kind)
    fail_at(f, "field '" + f.key + "' expects a single " + what);
  return f.values[0];
}

Int field_int(const Field& f) {
  const Token& t = single_value(f, Tok::number, "integer");
  if (t.text.find('/') != std::string::npos) fail_at(t, "field '" + f.key + "' expects an integer");
  return parse_int(t.text);
}

Rat field_rat(const Field& f) {
  const Token& t = single_value(f, Tok::number, "rational number");
  try {
    return parse_rat(t.text);
  } catch (const InputError& e) {
    fail_at(t, e.what());
  }
}

std::string field_ident(const Field& f) { return single_value(f, Tok::ident, "identifier").text; }

IntVec field_intlist(const Field& f) {
  std::vector<Token> toks = f.values;
  if (!toks.empty() && toks.front().kind == Tok::lbracket) {
    if (toks.back().kind != Tok::rbracket) fail_at(toks.back(), "unterminated list");
    toks = std::vector<Token>(toks.begin() + 1, toks.end() - 1);
  }
  IntVec out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i % 2 == 1) {
      if (toks[i].kind != Tok::comma) fail_at(toks[i], "expected ',' in integer list");
      continue;
    }
    if (toks[i].kind != Tok::number || toks[i].text.find('/') != std::string::npos)
      fail_at(toks[i], "expected an integer, got " + describe(toks[i]));
    out.push_back(parse_int(toks[i].text));
  }
  if (!toks.empty() && toks.size() % 2 == 0) fail_at(toks.back(), "trailing ',' in integer list");
  return out;
}

RatMat matrix_from_tokens(const std::vector<Token>& toks, const Token& anchor) {
  if (toks.empty() || toks.front().kind != Tok::lbracket) fail_at(anchor, "expected a matrix '[...]'");
  std::vector<std::vector<Rat>> rows(1);
  bool expect_value = true;
  std::size_t i = 1;
  for (; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (t.kind == Tok::rbracket) break;
    if (expect_value) {
      if (t.kind != Tok::number) fail_at(t, "expected a matrix entry, got " + describe(t));
      try {
        rows.back().push_back(parse_rat(t.text));
      } catch (const InputError& e) {
        fail_at(t, e.what());
      }
      expect_value = false;
    } else if (t.kind == Tok::comma) {
      expect_value = true;
    } else if (t.kind == Tok::semicolon) {
      rows.emplace_back();
      expect_value = true;
    } else {
      fail_at(t, "expected ',' or ';' in matrix, got " + describe(t));
    }
  }
  if (i == toks.size()) fail_at(toks.back(), "unterminated matrix");
  if (i + 1 != toks.size()) fail_at(toks[i + 1], "unexpected " + describe(toks[i + 1]) + " after matrix");
  if (rows.size() == 1 && rows[0].empty()) return RatMat(0, 0);
  if (expect_value) fail_at(toks[i], "missing matrix entry before ']'");
  const std::size_t cols = rows[0].size();
  std::vector<Rat> entries;
  for (const auto& r : rows) {
    if (r.size() != cols) fail_at(anchor, "matrix rows have different lengths");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return RatMat(rows.size(), cols, std::move(entries));
}

RatMat field_matrix(const Field& f) {
  if (f.values.empty()) fail_at(f, "field '" + f.key + "' expects a matrix");
  return matrix_from_tokens(f.values, f.values.front());
}

IntMat field_int_matrix(const Field& f) {
  const RatMat m = field_matrix(f);
  if (!is_integral(m)) fail_at(f, "field '" + f.key + "' expects an integer matrix");
  return to_int(m);
}

// ---- blocks ----------------------------------------------------------------

struct Block {
  EntryKind kind;
  std::string id;
  std::size_t line;
  std::size_t col;
  std::map<std::string, Field> fields;
};

class BlockReader {
 public:
  BlockReader(const Block& block, std::set<std::string> allowed) : block_(block) {
    for (const auto& [key, field] : block.fields)
      if (!allowed.count(key))
        fail_at(field, "unknown field '" + key + "' in " + std::string(to_string(block.kind)) +
                           " block");
  }
  const Field& require(const std::string& key) const {
    auto it = block_.fields.find(key);
    if (it == block_.fields.end())
      throw ParseError(block_.line, block_.col,
                       std::string(to_string(block_.kind)) + " " + block_.id +
                           ": missing field '" + key + "'");
    return it->second;
  }
  const Field* optional(const std::string& key) const {
    auto it = block_.fields.find(key);
    return it == block_.fields.end() ? nullptr : &it->second;
  }

 private:
  const Block& block_;
};

int small_int(const Field& f) {
  const Int v = field_int(f);
  if (!v.fits_sint_p()) fail_at(f, "field '" + f.key + "' is out of range");
  return static_cast<int>(v.get_si());
}

Block read_block(TokenStream& ts) {
  const Token& kind_tok = ts.expect(Tok::ident, "a block kind");
  Block block{};
  if (kind_tok.text == "surface") block.kind = EntryKind::surface;
  else if (kind_tok.text == "cover") block.kind = EntryKind::cover;
  else if (kind_tok.text == "vector") block.kind = EntryKind::vector;
  else if (kind_tok.text == "action") block.kind = EntryKind::action;
  else fail_at(kind_tok, "unknown block kind '" + kind_tok.text + "'");
  block.line = kind_tok.line;
  block.col = kind_tok.col;
  block.id = ts.expect(Tok::ident, "an identifier").text;
  ts.skip_newlines();
  ts.expect(Tok::lbrace, "'{'");
  for (;;) {
    ts.skip_newlines();
    if (ts.peek().kind == Tok::rbrace) {
      ts.next();
      break;
    }
    if (ts.peek().kind == Tok::end) fail_at(ts.peek(), "unterminated block " + block.id);
    const Token& key = ts.expect(Tok::ident, "a field name");
    Field f{key.text, {}, key.line, key.col};
    int depth = 0;
    for (;;) {
      const Token& t = ts.peek();
      if (t.kind == Tok::end) break;
      if (depth == 0 && (t.kind == Tok::newline || t.kind == Tok::rbrace)) break;
      if (t.kind == Tok::lbrace) fail_at(t, "unexpected '{' in field value");
      if (t.kind == Tok::lbracket) ++depth;
      if (t.kind == Tok::rbracket) --depth;
      if (depth < 0) fail_at(t, "unbalanced ']'");
      ts.next();
      if (t.kind != Tok::newline) f.values.push_back(t);
    }
    if (block.fields.count(f.key)) fail_at(f, "duplicate field '" + f.key + "'");
    block.fields.emplace(f.key, std::move(f));
  }
  return block;
}

}  // namespace

// ---- Catalog ---------------------------------------------------------------

std::vector<CatalogEntry> Catalog::load(std::string_view text, const LoadOptions& options) {
  TokenStream ts(tokenize(text));
  std::vector<CatalogEntry> fresh;
  std::map<std::string, std::size_t> fresh_index;

  auto find_any = [&](const std::string& id) -> const CatalogEntry* {
    if (auto it = fresh_index.find(id); it != fresh_index.end()) return &fresh[it->second];
    return find(id);
  };
  auto surface_ref = [&](const Field& f) -> const NumericalSurface& {
    const std::string id = field_ident(f);
    const CatalogEntry* e = find_any(id);
    if (!e) fail_at(f.values[0], "unknown surface '" + id + "'");
    if (e->kind != EntryKind::surface) fail_at(f.values[0], "'" + id + "' is not a surface");
    return std::get<NumericalSurface>(e->payload);
  };

  for (;;) {
    ts.skip_newlines();
    if (ts.peek().kind == Tok::end) break;
    const Block block = read_block(ts);
    if (find_any(block.id))
      throw ParseError(block.line, block.col, "duplicate id '" + block.id + "'");
    const std::string label = std::string(to_string(block.kind)) + " " + block.id;
    auto invalid = [&](const std::string& msg) {
      return ParseError(block.line, block.col, label + ": " + msg);
    };

    std::optional<CatalogEntry> entry;
    try {
      switch (block.kind) {
        case EntryKind::surface: {
          BlockReader r(block, {"rank", "intersection", "chi_o", "canonical_order"});
          const int rank = small_int(r.require("rank"));
          if (rank < 0) fail_at(r.require("rank"), "rank must be non-negative");
          IntMat gram(0, 0);
          if (const Field* f = r.optional("intersection")) gram = field_int_matrix(*f);
          else if (rank > 0) r.require("intersection");
          if (gram.rows() != static_cast<std::size_t>(rank) || gram.cols() != gram.rows())
            throw invalid("intersection matrix is " + gram.shape() + " but rank is " +
                          std::to_string(rank));
          NumericalSurface s(block.id, BilinearForm(std::move(gram)), field_int(r.require("chi_o")),
                             small_int(r.require("canonical_order")));
          entry = CatalogEntry{block.id, block.kind, std::move(s)};
          break;
        }
        case EntryKind::cover: {
          BlockReader r(block, {"base", "cover", "degree", "pull", "push"});
          CoverTransfer t(block.id, surface_ref(r.require("base")), surface_ref(r.require("cover")),
                          small_int(r.require("degree")), field_int_matrix(r.require("pull")),
                          field_int_matrix(r.require("push")));
          const ValidationReport report = validate_cover(t);
          if (!options.allow_invalid && !report.ok()) {
            const CheckResult* bad = report.first_failure();
            throw invalid("fails the " + bad->name + " axiom (" + bad->witness + ")");
          }
          entry = CatalogEntry{block.id, block.kind, std::move(t)};
          break;
        }
        case EntryKind::vector: {
          BlockReader r(block, {"on", "r", "c", "ch2"});
          const NumericalSurface& s = surface_ref(r.require("on"));
          ChernCharacter ch{field_int(r.require("r")), {}, field_rat(r.require("ch2"))};
          if (const Field* f = r.optional("c")) ch.c = field_intlist(*f);
          require_integral_class(s, ch);
          entry = CatalogEntry{block.id, block.kind, NamedVector{s.name(), std::move(ch)}};
          break;
        }
        case EntryKind::action: {
          BlockReader r(block, {"on", "order", "gen"});
          GActionLattice a(block.id, surface_ref(r.require("on")), small_int(r.require("order")),
                           field_matrix(r.require("gen")));
          entry = CatalogEntry{block.id, block.kind, std::move(a)};
          break;
        }
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw invalid(e.what());
    }
    fresh_index.emplace(block.id, fresh.size());
    fresh.push_back(std::move(*entry));
  }

  for (const CatalogEntry& e : fresh) {
    index_.emplace(e.id, entries_.size());
    entries_.push_back(e);
  }
  return fresh;
}

std::size_t Catalog::count(EntryKind kind) const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.kind == kind;
  return n;
}

const CatalogEntry* Catalog::find(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const CatalogEntry& Catalog::lookup(const std::string& id, EntryKind kind) const {
  const CatalogEntry* e = find(id);
  if (!e) throw InputError("unknown " + std::string(to_string(kind)) + " '" + id + "'");
  if (e->kind != kind)
    throw InputError("'" + id + "' is a " + std::string(to_string(e->kind)) + ", not a " +
                     std::string(to_string(kind)));
  return *e;
}

const NumericalSurface& Catalog::surface(const std::string& id) const {
  return std::get<NumericalSurface>(lookup(id, EntryKind::surface).payload);
}
const CoverTransfer& Catalog::cover(const std::string& id) const {
  return std::get<CoverTransfer>(lookup(id, EntryKind::cover).payload);
}
const NamedVector& Catalog::vector(const std::string& id) const {
  return std::get<NamedVector>(lookup(id, EntryKind::vector).payload);
}
const GActionLattice& Catalog::action(const std::string& id) const {
  return std::get<GActionLattice>(lookup(id, EntryKind::action).payload);
}

std::vector<CatalogEntry> load_definitions(std::string_view text, const LoadOptions& options) {
  Catalog c;
  return c.load(text, options);
}

std::string_view builtin_catalog_text() { return kBuiltinCatalog; }

const Catalog& builtin_catalog() {
  static const Catalog catalog = [] {
    Catalog c;
    c.load(builtin_catalog_text());
    return c;
  }();
  return catalog;
}

RatMat parse_matrix(std::string_view text) {
  std::vector<Token> toks = tokenize(text);
  std::vector<Token> body;
  for (const Token& t : toks)
    if (t.kind != Tok::newline && t.kind != Tok::end) body.push_back(t);
  return matrix_from_tokens(body, toks.front());
}

}  // namespace fmq
