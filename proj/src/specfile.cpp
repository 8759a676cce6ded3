#include "wha/specfile.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace wha {

const char* kind_name(SpecKind k) {
  switch (k) {
    case SpecKind::Algebra: return "algebra";
    case SpecKind::WeakBialgebra: return "weak_bialgebra";
    case SpecKind::WeakHopf: return "weak_hopf";
    case SpecKind::Module: return "module";
    case SpecKind::Comodule: return "comodule";
    case SpecKind::YdModule: return "yd_module";
    case SpecKind::GroupoidKind: return "groupoid";
  }
  return "?";
}

namespace {

SpecKind kind_from_name(const std::string& s, const std::string& where) {
  for (SpecKind k : {SpecKind::Algebra, SpecKind::WeakBialgebra,
                     SpecKind::WeakHopf, SpecKind::Module, SpecKind::Comodule,
                     SpecKind::YdModule, SpecKind::GroupoidKind}) {
    if (s == kind_name(k)) return k;
  }
  throw Error(Error::Kind::SchemaError, where + ": unknown kind '" + s + "'");
}

struct Token {
  enum class Type { Word, Number, LBracket, RBracket, Comma, Colon, End };
  Type type = Type::End;
  std::string text;
  std::size_t line = 0, col = 0;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::string filename)
      : text_(text), file_(std::move(filename)) {}

  Token peek() {
    if (!lookahead_) lookahead_ = lex();
    return *lookahead_;
  }
  Token next() {
    Token t = peek();
    lookahead_.reset();
    return t;
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    std::ostringstream os;
    os << file_ << ":" << t.line << ":" << t.col << ": " << msg;
    throw Error(Error::Kind::SyntaxError, os.str());
  }

 private:
  Token lex() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    auto single = [&](Token::Type type) {
      t.type = type;
      t.text = std::string(1, c);
      ++pos_;
      ++col_;
      return t;
    };
    if (c == '[') return single(Token::Type::LBracket);
    if (c == ']') return single(Token::Type::RBracket);
    if (c == ',') return single(Token::Type::Comma);
    if (c == ':') return single(Token::Type::Colon);
    if (c == '-' || (c >= '0' && c <= '9')) {
      std::size_t start = pos_;
      if (c == '-') ++pos_;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
        ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
          ++pos_;
      }
      t.type = Token::Type::Number;
      t.text = std::string(text_.substr(start, pos_ - start));
      col_ += pos_ - start;
      return t;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      t.type = Token::Type::Word;
      t.text = std::string(text_.substr(start, pos_ - start));
      col_ += pos_ - start;
      return t;
    }
    t.type = Token::Type::End;
    fail(t, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  std::optional<Token> lookahead_;
};

Scalar parse_scalar_token(const Token& t, const Field& f, Lexer& lx) {
  std::size_t slash = t.text.find('/');
  try {
    if (slash == std::string::npos) {
      return Scalar::fraction(mpz_class(t.text), 1, f);
    }
    return Scalar::fraction(mpz_class(t.text.substr(0, slash)),
                            mpz_class(t.text.substr(slash + 1)), f);
  } catch (const Error& e) {
    if (e.kind() == Error::Kind::FieldError) {
      throw Error(Error::Kind::FieldError,
                  "at line " + std::to_string(t.line) + ": " + e.what());
    }
    lx.fail(t, e.what());
  }
}

long parse_int_token(const Token& t, Lexer& lx) {
  if (t.type != Token::Type::Number ||
      t.text.find('/') != std::string::npos) {
    lx.fail(t, "expected an integer");
  }
  return std::stol(t.text);
}

// Parses a nested array with the given depth; at depth 1 returns scalars.
void parse_array(Lexer& lx, std::size_t depth, const Field& f,
                 std::vector<Scalar>& flat, std::vector<std::size_t>& shape,
                 std::size_t level) {
  Token open = lx.next();
  if (open.type != Token::Type::LBracket) lx.fail(open, "expected '['");
  std::size_t count = 0;
  bool first = true;
  while (true) {
    Token t = lx.peek();
    if (t.type == Token::Type::RBracket) {
      lx.next();
      break;
    }
    if (!first) {
      if (t.type != Token::Type::Comma) lx.fail(t, "expected ',' or ']'");
      lx.next();
      t = lx.peek();
    }
    first = false;
    if (depth == 1) {
      Token num = lx.next();
      if (num.type != Token::Type::Number) lx.fail(num, "expected a number");
      flat.push_back(parse_scalar_token(num, f, lx));
    } else {
      parse_array(lx, depth - 1, f, flat, shape, level + 1);
    }
    ++count;
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  if (shape.size() <= level) shape.resize(level + 1, kUnset);
  if (shape[level] == kUnset) {
    shape[level] = count;
  } else if (shape[level] != count) {
    lx.fail(open, "ragged array");
  }
}

struct ParsedArray {
  std::vector<Scalar> flat;
  std::vector<std::size_t> shape;
};

ParsedArray parse_nested(Lexer& lx, std::size_t depth, const Field& f) {
  ParsedArray out;
  parse_array(lx, depth, f, out.flat, out.shape, 0);
  return out;
}

std::vector<long> parse_int_array(Lexer& lx) {
  std::vector<long> out;
  Token open = lx.next();
  if (open.type != Token::Type::LBracket) lx.fail(open, "expected '['");
  bool first = true;
  while (true) {
    Token t = lx.peek();
    if (t.type == Token::Type::RBracket) {
      lx.next();
      break;
    }
    if (!first) {
      if (t.type != Token::Type::Comma) lx.fail(t, "expected ',' or ']'");
      lx.next();
    }
    first = false;
    out.push_back(parse_int_token(lx.next(), lx));
  }
  return out;
}

std::string scalar_text(const Scalar& s) { return s.str(); }

void emit_vec(std::ostringstream& os, const Vec& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << scalar_text(v[i]);
  }
  os << ']';
}

void emit_matrix(std::ostringstream& os, const LinearMap& m,
                 const char* indent) {
  os << "[\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent;
    emit_vec(os, m.row(i));
    os << (i + 1 < m.rows() ? ",\n" : "]");
  }
  if (m.rows() == 0) os << indent << "]";
}

}  // namespace

SpecFile parse_spec(std::string_view text, const std::string& filename,
                    const std::optional<Field>& override_field) {
  // First pass: find the field descriptor (needed to interpret fractions).
  Field field = Field::rationals();
  {
    Lexer pre(text, filename);
    while (true) {
      Token t = pre.next();
      if (t.type == Token::Type::End) break;
      if (t.type == Token::Type::Word && t.text == "field") {
        Token colon = pre.next();
        if (colon.type != Token::Type::Colon) pre.fail(colon, "expected ':'");
        Token w = pre.next();
        if (w.type != Token::Type::Word) pre.fail(w, "expected a field name");
        if (w.text == "rational") {
          field = Field::rationals();
        } else if (w.text == "prime") {
          Token p = pre.next();
          field = Field::prime(
              static_cast<std::uint64_t>(parse_int_token(p, pre)));
        } else {
          pre.fail(w, "unknown field '" + w.text + "'");
        }
        break;
      }
    }
  }
  if (override_field) field = *override_field;

  SpecFile s;
  s.field = field;
  Lexer lx(text, filename);
  std::map<std::string, ParsedArray> arrays;
  std::map<std::string, std::vector<long>> int_arrays;
  std::map<std::string, long> ints;
  bool have_kind = false;

  while (true) {
    Token key = lx.next();
    if (key.type == Token::Type::End) break;
    if (key.type != Token::Type::Word) lx.fail(key, "expected a key");
    Token colon = lx.next();
    if (colon.type != Token::Type::Colon) lx.fail(colon, "expected ':'");
    const std::string& k = key.text;

    if (k == "kind") {
      Token w = lx.next();
      if (w.type != Token::Type::Word) lx.fail(w, "expected a kind");
      s.kind = kind_from_name(w.text, filename);
      have_kind = true;
    } else if (k == "field") {
      Token w = lx.next();
      if (w.text == "prime") lx.next();
    } else if (k == "name") {
      Token w = lx.next();
      if (w.type != Token::Type::Word) lx.fail(w, "expected a name");
      s.name = w.text;
    } else if (k == "variant") {
      Token w = lx.next();
      s.variant = variant_from_name(w.text);
    } else if (k == "module_side" || k == "coaction_side") {
      Token w = lx.next();
      Side side;
      if (w.text == "left") {
        side = Side::Left;
      } else if (w.text == "right") {
        side = Side::Right;
      } else {
        lx.fail(w, "expected left or right");
      }
      if (k == "module_side") {
        if (!s.module) s.module = ModuleData{};
        s.module->side = side;
      } else {
        s.coaction_side = side;
      }
    } else if (k == "dim" || k == "objects" || k == "morphisms" ||
               k == "module_dim") {
      ints[k] = parse_int_token(lx.next(), lx);
    } else if (k == "source" || k == "target" || k == "inverse" ||
               k == "identity") {
      int_arrays[k] = parse_int_array(lx);
    } else if (k == "compose") {
      ParsedArray pa;
      Token open = lx.peek();
      (void)open;
      // compose is an integer matrix with -1 entries
      std::vector<long> flat;
      Token ob = lx.next();
      if (ob.type != Token::Type::LBracket) lx.fail(ob, "expected '['");
      bool firstrow = true;
      std::size_t rowlen = 0, rows = 0;
      while (true) {
        Token t = lx.peek();
        if (t.type == Token::Type::RBracket) {
          lx.next();
          break;
        }
        if (!firstrow) {
          if (t.type != Token::Type::Comma) lx.fail(t, "expected ',' or ']'");
          lx.next();
        }
        firstrow = false;
        std::vector<long> row = parse_int_array(lx);
        if (rows == 0) {
          rowlen = row.size();
        } else if (row.size() != rowlen) {
          lx.fail(t, "ragged compose table");
        }
        flat.insert(flat.end(), row.begin(), row.end());
        ++rows;
      }
      int_arrays["compose"] = std::move(flat);
      ints["compose_rows"] = static_cast<long>(rows);
    } else if (k == "mult" || k == "comult" || k == "action" ||
               k == "coaction") {
      arrays[k] = parse_nested(lx, 3, field);
    } else if (k == "antipode") {
      arrays[k] = parse_nested(lx, 2, field);
    } else if (k == "unit" || k == "counit") {
      arrays[k] = parse_nested(lx, 1, field);
    } else {
      throw Error(Error::Kind::SchemaError,
                  filename + ": unknown key '" + k + "' at line " +
                      std::to_string(key.line));
    }
  }

  if (!have_kind) {
    throw Error(Error::Kind::SchemaError, filename + ": missing kind");
  }

  auto require_int = [&](const char* k) {
    auto it = ints.find(k);
    if (it == ints.end() || it->second < 0) {
      throw Error(Error::Kind::SchemaError,
                  filename + ": missing or bad '" + k + "'");
    }
    return static_cast<std::size_t>(it->second);
  };
  auto require_array = [&](const char* k) -> ParsedArray& {
    auto it = arrays.find(k);
    if (it == arrays.end()) {
      throw Error(Error::Kind::SchemaError,
                  filename + ": missing '" + std::string(k) + "'");
    }
    return it->second;
  };

  if (s.kind == SpecKind::GroupoidKind) {
    Groupoid g;
    g.n_objects = require_int("objects");
    std::size_t nm = require_int("morphisms");
    auto geti = [&](const char* k) {
      auto it = int_arrays.find(k);
      if (it == int_arrays.end()) {
        throw Error(Error::Kind::SchemaError,
                    filename + ": missing '" + std::string(k) + "'");
      }
      return it->second;
    };
    auto to_sizes = [&](const std::vector<long>& v, std::size_t expect,
                        const char* k) {
      if (v.size() != expect) {
        throw Error(Error::Kind::SchemaError,
                    filename + ": '" + std::string(k) + "' length mismatch");
      }
      std::vector<std::size_t> out;
      for (long x : v) {
        if (x < 0) {
          throw Error(Error::Kind::SchemaError,
                      filename + ": negative entry in '" + std::string(k) + "'");
        }
        out.push_back(static_cast<std::size_t>(x));
      }
      return out;
    };
    g.source = to_sizes(geti("source"), nm, "source");
    g.target = to_sizes(geti("target"), nm, "target");
    g.inverse = to_sizes(geti("inverse"), nm, "inverse");
    g.identity = to_sizes(geti("identity"), g.n_objects, "identity");
    const auto& flat = geti("compose");
    if (flat.size() != nm * nm ||
        ints["compose_rows"] != static_cast<long>(nm)) {
      throw Error(Error::Kind::SchemaError,
                  filename + ": compose table shape mismatch");
    }
    g.compose.assign(nm, std::vector<std::ptrdiff_t>(nm, -1));
    for (std::size_t i = 0; i < nm; ++i)
      for (std::size_t j = 0; j < nm; ++j)
        g.compose[i][j] = flat[i * nm + j];
    g.validate();
    s.groupoid = std::move(g);
    s.dim = nm;
    return s;
  }

  const std::size_t n = require_int("dim");
  s.dim = n;
  auto as_linmap = [&](ParsedArray& pa, std::size_t rows, std::size_t cols,
                       const char* k) {
    if (pa.flat.size() != rows * cols) {
      throw Error(Error::Kind::SchemaError,
                  filename + ": '" + std::string(k) + "' shape mismatch");
    }
    LinearMap m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = pa.flat[i * cols + j];
    return m;
  };
  auto as_vec = [&](ParsedArray& pa, std::size_t len, const char* k) {
    if (pa.flat.size() != len) {
      throw Error(Error::Kind::SchemaError,
                  filename + ": '" + std::string(k) + "' length mismatch");
    }
    Vec v(field, len);
    for (std::size_t i = 0; i < len; ++i) v[i] = pa.flat[i];
    return v;
  };

  // mult[i][j][k]: flat index (i*n+j)*n + k; stored as n x n^2 with
  // column i*n+j.
  {
    ParsedArray& pm = require_array("mult");
    if (pm.shape != std::vector<std::size_t>{n, n, n}) {
      throw Error(Error::Kind::SchemaError, filename + ": mult shape");
    }
    AlgebraData a{field, n, LinearMap(field, n, n * n),
                  as_vec(require_array("unit"), n, "unit")};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          a.mult.at(k, i * n + j) = pm.flat[(i * n + j) * n + k];
    s.algebra = std::move(a);
  }

  if (s.kind != SpecKind::Algebra) {
    ParsedArray& pc = require_array("comult");
    if (pc.shape != std::vector<std::size_t>{n, n, n}) {
      throw Error(Error::Kind::SchemaError, filename + ": comult shape");
    }
    CoalgebraData c{field, n, LinearMap(field, n * n, n),
                    as_vec(require_array("counit"), n, "counit")};
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          c.comult.at(a * n + b, j) = pc.flat[(j * n + a) * n + b];
    s.coalgebra = std::move(c);
  }
  if (arrays.count("antipode")) {
    s.antipode = as_linmap(arrays["antipode"], n, n, "antipode");
  }

  if (s.kind == SpecKind::Module || s.kind == SpecKind::Comodule ||
      s.kind == SpecKind::YdModule) {
    const std::size_t m = require_int("module_dim");
    s.module_dim = m;
    if (s.kind != SpecKind::Comodule) {
      ParsedArray& pa = require_array("action");
      if (pa.shape != std::vector<std::size_t>{n, m, m}) {
        throw Error(Error::Kind::SchemaError, filename + ": action shape");
      }
      ModuleData mod = s.module ? *s.module : ModuleData{};
      mod.dim = m;
      mod.act.clear();
      for (std::size_t hh = 0; hh < n; ++hh) {
        LinearMap a(field, m, m);
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c)
            a.at(r, c) = pa.flat[(hh * m + r) * m + c];
        mod.act.push_back(std::move(a));
      }
      if (s.kind == SpecKind::YdModule) {
        if (!s.variant) {
          throw Error(Error::Kind::SchemaError, filename + ": missing variant");
        }
        mod.side = action_side(*s.variant);
      }
      s.module = std::move(mod);
    }
    if (s.kind != SpecKind::Module) {
      bool left = s.kind == SpecKind::YdModule
                      ? coaction_is_left(*s.variant)
                      : (s.coaction_side.value_or(Side::Left) == Side::Left);
      ParsedArray& pa = require_array("coaction");
      std::vector<std::size_t> expect =
          left ? std::vector<std::size_t>{m, n, m}
               : std::vector<std::size_t>{m, m, n};
      if (pa.shape != expect) {
        throw Error(Error::Kind::SchemaError, filename + ": coaction shape");
      }
      std::size_t rows = n * m;
      LinearMap co(field, rows, m);
      for (std::size_t j = 0; j < m; ++j) {
        if (left) {
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < m; ++k)
              co.at(a * m + k, j) = pa.flat[(j * n + a) * m + k];
        } else {
          for (std::size_t k = 0; k < m; ++k)
            for (std::size_t a = 0; a < n; ++a)
              co.at(k * n + a, j) = pa.flat[(j * m + k) * n + a];
        }
      }
      s.coaction = std::move(co);
    }
  }
  return s;
}

SpecFile parse_spec_path(const std::string& path,
                         const std::optional<Field>& override_field) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Error::Kind::SyntaxError, "cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str(), path, override_field);
}

std::string emit_spec(const SpecFile& s) {
  std::ostringstream os;
  os << "kind: " << kind_name(s.kind) << "\n";
  if (!s.name.empty()) os << "name: " << s.name << "\n";
  os << "field: " << s.field.str() << "\n";

  if (s.kind == SpecKind::GroupoidKind) {
    const Groupoid& g = *s.groupoid;
    os << "objects: " << g.n_objects << "\n";
    os << "morphisms: " << g.n_morphisms() << "\n";
    auto emit_ints = [&](const char* k, const std::vector<std::size_t>& v) {
      os << k << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
      }
      os << "]\n";
    };
    emit_ints("source", g.source);
    emit_ints("target", g.target);
    emit_ints("inverse", g.inverse);
    emit_ints("identity", g.identity);
    os << "compose: [\n";
    for (std::size_t i = 0; i < g.n_morphisms(); ++i) {
      os << "  [";
      for (std::size_t j = 0; j < g.n_morphisms(); ++j) {
        if (j) os << ", ";
        os << g.compose[i][j];
      }
      os << (i + 1 < g.n_morphisms() ? "],\n" : "]]\n");
    }
    return os.str();
  }

  const std::size_t n = s.dim;
  os << "dim: " << n << "\n";
  os << "mult: [\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << "  [";
    for (std::size_t j = 0; j < n; ++j) {
      if (j) os << ", ";
      emit_vec(os, s.algebra->basis_product(i, j));
    }
    os << (i + 1 < n ? "],\n" : "]]\n");
  }
  os << "unit: ";
  emit_vec(os, s.algebra->unit);
  os << "\n";
  if (s.coalgebra) {
    os << "comult: [\n";
    for (std::size_t j = 0; j < n; ++j) {
      os << "  [";
      Vec dj = s.coalgebra->comult.column(j);
      for (std::size_t a = 0; a < n; ++a) {
        if (a) os << ", ";
        Vec row(s.field, n);
        for (std::size_t b = 0; b < n; ++b) row[b] = dj[a * n + b];
        emit_vec(os, row);
      }
      os << (j + 1 < n ? "],\n" : "]]\n");
    }
    os << "counit: ";
    emit_vec(os, s.coalgebra->counit);
    os << "\n";
  }
  if (s.antipode) {
    os << "antipode: ";
    emit_matrix(os, *s.antipode, "  ");
    os << "\n";
  }
  if (s.kind == SpecKind::Module || s.kind == SpecKind::Comodule ||
      s.kind == SpecKind::YdModule) {
    os << "module_dim: " << s.module_dim << "\n";
    if (s.variant) os << "variant: " << variant_name(*s.variant) << "\n";
    if (s.kind == SpecKind::Module && s.module) {
      os << "module_side: "
         << (s.module->side == Side::Left ? "left" : "right") << "\n";
    }
    if (s.kind == SpecKind::Comodule) {
      os << "coaction_side: "
         << (s.coaction_side.value_or(Side::Left) == Side::Left ? "left"
                                                                : "right")
         << "\n";
    }
    if (s.module && s.kind != SpecKind::Comodule) {
      os << "action: [\n";
      for (std::size_t hh = 0; hh < n; ++hh) {
        os << "  [";
        for (std::size_t r = 0; r < s.module_dim; ++r) {
          if (r) os << ", ";
          emit_vec(os, s.module->act[hh].row(r));
        }
        os << (hh + 1 < n ? "],\n" : "]]\n");
      }
    }
    if (s.coaction) {
      bool left = s.kind == SpecKind::YdModule
                      ? coaction_is_left(*s.variant)
                      : (s.coaction_side.value_or(Side::Left) == Side::Left);
      const std::size_t m = s.module_dim;
      os << "coaction: [\n";
      for (std::size_t j = 0; j < m; ++j) {
        os << "  [";
        Vec cj = s.coaction->column(j);
        if (left) {
          for (std::size_t a = 0; a < n; ++a) {
            if (a) os << ", ";
            Vec row(s.field, m);
            for (std::size_t k = 0; k < m; ++k) row[k] = cj[a * m + k];
            emit_vec(os, row);
          }
        } else {
          for (std::size_t k = 0; k < m; ++k) {
            if (k) os << ", ";
            Vec row(s.field, n);
            for (std::size_t a = 0; a < n; ++a) row[a] = cj[k * n + a];
            emit_vec(os, row);
          }
        }
        os << (j + 1 < m ? "],\n" : "]]\n");
      }
    }
  }
  return os.str();
}

SpecFile spec_from_hopf(const WeakHopfAlgebra& h, const std::string& name) {
  SpecFile s;
  s.kind = SpecKind::WeakHopf;
  s.field = h.field();
  s.name = name;
  s.dim = h.dim();
  s.algebra = h.base.alg;
  s.coalgebra = h.base.coalg;
  s.antipode = h.antipode;
  return s;
}

SpecFile spec_from_groupoid(const Groupoid& g, const Field& f,
                            const std::string& name) {
  SpecFile s;
  s.kind = SpecKind::GroupoidKind;
  s.field = f;
  s.name = name;
  s.groupoid = g;
  s.dim = g.n_morphisms();
  return s;
}

SpecFile spec_from_yd(const WeakHopfAlgebra& h, const YDModule& m,
                      const std::string& name) {
  SpecFile s = spec_from_hopf(h, name);
  s.kind = SpecKind::YdModule;
  s.module_dim = m.dim;
  s.variant = m.variant;
  s.module = m.module;
  s.coaction = m.coaction;
  return s;
}

WeakHopfAlgebra hopf_from_spec(const SpecFile& s) {
  if (s.kind == SpecKind::GroupoidKind) {
    return groupoid_algebra(*s.groupoid, s.field);
  }
  if (!s.algebra || !s.coalgebra) {
    throw Error(Error::Kind::SchemaError,
                "spec kind " + std::string(kind_name(s.kind)) +
                    " does not describe a weak Hopf algebra");
  }
  WeakHopfAlgebra h;
  h.base = WeakBialgebra::build(*s.algebra, *s.coalgebra);
  if (s.antipode) {
    h.antipode = *s.antipode;
    auto inv = inverse_map(h.antipode);
    if (!inv) {
      throw Error(Error::Kind::SchemaError, "stored antipode is not bijective");
    }
    h.antipode_inv = *inv;
  } else {
    AntipodeSolution sol = solve_antipode(h.base);
    if (sol.status != AntipodeSolution::Status::Found) {
      throw Error(Error::Kind::SchemaError,
                  "no antipode stored and the solver reports: " + sol.detail);
    }
    h.antipode = *sol.antipode;
    h.antipode_inv = *sol.antipode_inv;
  }
  return h;
}

}  // namespace wha
