#include "iswb/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "iswb/errors.hpp"

namespace iswb {

const char* doc_kind_name(DocKind k) {
  switch (k) {
    case DocKind::Poset: return "poset";
    case DocKind::System: return "isw";
    case DocKind::FrameDoc: return "frame";
    case DocKind::CisDoc: return "cis";
    case DocKind::AisDoc: return "ais";
    case DocKind::MapDoc: return "map";
  }
  return "?";
}

namespace {

struct Line {
  int number;
  std::vector<std::string> fields;
};

[[noreturn]] void bad(int line, const std::string& msg) {
  fail(Err::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line l{number, {}};
    std::string f;
    while (ls >> f) l.fields.push_back(f);
    if (!l.fields.empty()) out.push_back(std::move(l));
  }
  return out;
}

void check_token_name(const Line& l, const std::string& name) {
  if (name.empty() || name.find(':') != std::string::npos)
    bad(l.number, "bad token name '" + name + "'");
}

// Shared accumulation for the witness bearing formats.
struct SysLines {
  std::vector<std::string> tokens;
  std::string delta;
  bool has_delta = false;
  struct ConLine {
    int line;
    std::string witness;
    std::vector<std::string> body;
  };
  struct EntLine {
    int line;
    std::string witness;
    std::vector<std::string> body;
    std::string target;
  };
  std::vector<ConLine> cons;
  std::vector<EntLine> ents;
};

int need_token(const SysLines& s, const Line& l, const std::string& name) {
  for (std::size_t i = 0; i < s.tokens.size(); ++i)
    if (s.tokens[i] == name) return static_cast<int>(i);
  bad(l.number, "unknown token '" + name + "'");
}

Mask body_mask(const SysLines& s, const Line& l, const std::vector<std::string>& body) {
  Mask m = 0;
  for (const std::string& t : body) m |= bit(need_token(s, l, t));
  return m;
}

std::size_t find_colon(const Line& l, std::size_t from) {
  for (std::size_t i = from; i < l.fields.size(); ++i)
    if (l.fields[i] == ":") return i;
  bad(l.number, "expected ':'");
}

void parse_tokens_line(SysLines& s, const Line& l) {
  if (!s.tokens.empty()) bad(l.number, "duplicate tokens line");
  if (l.fields.size() < 2) bad(l.number, "tokens line needs at least one token");
  for (std::size_t i = 1; i < l.fields.size(); ++i) {
    check_token_name(l, l.fields[i]);
    s.tokens.push_back(l.fields[i]);
  }
}

void parse_delta_line(SysLines& s, const Line& l) {
  if (s.has_delta) bad(l.number, "duplicate delta line");
  if (l.fields.size() != 2) bad(l.number, "delta line needs one token");
  s.delta = l.fields[1];
  s.has_delta = true;
}

// con <witness> : <body...>, witness already split off by the caller
void parse_con_tail(SysLines& s, const Line& l, const std::string& witness, std::size_t at) {
  if (at >= l.fields.size() || l.fields[at] != ":") bad(l.number, "expected ':'");
  SysLines::ConLine c{l.number, witness, {}};
  for (std::size_t i = at + 1; i < l.fields.size(); ++i) c.body.push_back(l.fields[i]);
  s.cons.push_back(std::move(c));
}

void parse_ent_tail(SysLines& s, const Line& l, const std::string& witness, std::size_t at) {
  if (at >= l.fields.size() || l.fields[at] != ":") bad(l.number, "expected ':'");
  std::size_t second = find_colon(l, at + 1);
  if (second + 2 != l.fields.size()) bad(l.number, "expected one entailed token after ':'");
  SysLines::EntLine e{l.number, witness, {}, l.fields[second + 1]};
  for (std::size_t i = at + 1; i < second; ++i) e.body.push_back(l.fields[i]);
  s.ents.push_back(std::move(e));
}

Isw build_isw(const SysLines& s, int kind_line) {
  if (s.tokens.empty()) bad(kind_line, "missing tokens line");
  if (!s.has_delta) bad(kind_line, "missing delta line");
  int delta = need_token(s, Line{kind_line, {}}, s.delta);
  std::vector<ConEntry> con;
  std::vector<Mask> ent;
  for (const auto& c : s.cons) {
    Line l{c.line, {}};
    con.push_back({need_token(s, l, c.witness), body_mask(s, l, c.body)});
    ent.push_back(0);
  }
  for (const auto& e : s.ents) {
    Line l{e.line, {}};
    int w = need_token(s, l, e.witness);
    Mask b = body_mask(s, l, e.body);
    int a = need_token(s, l, e.target);
    bool found = false;
    for (std::size_t k = 0; k < con.size(); ++k)
      if (con[k].witness == w && con[k].body == b) {
        ent[k] |= bit(a);
        found = true;
      }
    if (!found) bad(e.line, "entailment on an undeclared consistency entry");
  }
  return make_isw(s.tokens, delta, std::move(con), std::move(ent));
}

Document parse_poset(const std::vector<Line>& lines) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  bool has_elems = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.fields[0] == "elems") {
      if (has_elems) bad(l.number, "duplicate elems line");
      if (l.fields.size() < 2) bad(l.number, "elems line needs at least one element");
      for (std::size_t f = 1; f < l.fields.size(); ++f) {
        check_token_name(l, l.fields[f]);
        names.push_back(l.fields[f]);
      }
      has_elems = true;
    } else if (l.fields[0] == "le") {
      if (l.fields.size() != 3) bad(l.number, "le line needs two elements");
      pairs.emplace_back(l.fields[1], l.fields[2]);
    } else {
      bad(l.number, "unknown directive '" + l.fields[0] + "'");
    }
  }
  if (!has_elems) bad(lines[0].number, "missing elems line");
  Document d;
  d.kind = DocKind::Poset;
  d.poset = poset_from_pairs(names, pairs);
  return d;
}

Document parse_isw(const std::vector<Line>& lines) {
  SysLines s;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.fields[0] == "tokens") parse_tokens_line(s, l);
    else if (l.fields[0] == "delta") parse_delta_line(s, l);
    else if (l.fields[0] == "con") {
      if (l.fields.size() < 2) bad(l.number, "con line needs a witness");
      parse_con_tail(s, l, l.fields[1], 2);
    } else if (l.fields[0] == "ent") {
      if (l.fields.size() < 2) bad(l.number, "ent line needs a witness");
      parse_ent_tail(s, l, l.fields[1], 2);
    } else
      bad(l.number, "unknown directive '" + l.fields[0] + "'");
  }
  Document d;
  d.kind = DocKind::System;
  d.isw = build_isw(s, lines[0].number);
  return d;
}

Document parse_frame(const std::vector<Line>& lines) {
  SysLines s;
  std::vector<std::pair<std::string, std::string>> acc;
  bool has_acc = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& head = l.fields[0];
    if (head == "tokens") parse_tokens_line(s, l);
    else if (head == "delta") parse_delta_line(s, l);
    else if (head.rfind("con@", 0) == 0) parse_con_tail(s, l, head.substr(4), 1);
    else if (head.rfind("ent@", 0) == 0) parse_ent_tail(s, l, head.substr(4), 1);
    else if (head == "acc") {
      if (l.fields.size() != 3) bad(l.number, "acc line needs two tokens");
      acc.emplace_back(l.fields[1], l.fields[2]);
      has_acc = true;
    } else
      bad(l.number, "unknown directive '" + head + "'");
  }
  Isw flat = build_isw(s, lines[0].number);
  Document d;
  d.kind = DocKind::FrameDoc;
  d.frame = frame_view(flat);
  if (has_acc) {
    Relation derived = accessibility(d.frame);
    Relation declared(d.frame.size(), std::vector<bool>(d.frame.size(), false));
    for (const auto& [a, b] : acc) {
      int i = d.frame.token_index(a), j = d.frame.token_index(b);
      if (i < 0) fail(Err::ParseError, "acc line names unknown token '" + a + "'");
      if (j < 0) fail(Err::ParseError, "acc line names unknown token '" + b + "'");
      declared[i][j] = true;
    }
    if (declared != derived)
      fail(Err::ParseError, "declared accessibility disagrees with the derived relation");
  }
  return d;
}

// cis/ais share one witness-free shape: con : <body>, ent <body> : <token>
struct FlatLines {
  std::vector<std::string> tokens;
  std::string delta;
  bool has_delta = false;
  std::vector<std::pair<int, std::vector<std::string>>> cons;
  struct EntLine {
    int line;
    std::vector<std::string> body;
    std::string target;
  };
  std::vector<EntLine> ents;
};

void parse_flat(FlatLines& s, const std::vector<Line>& lines, bool want_delta) {
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.fields[0] == "tokens") {
      if (!s.tokens.empty()) bad(l.number, "duplicate tokens line");
      if (l.fields.size() < 2) bad(l.number, "tokens line needs at least one token");
      for (std::size_t f = 1; f < l.fields.size(); ++f) {
        check_token_name(l, l.fields[f]);
        s.tokens.push_back(l.fields[f]);
      }
    } else if (l.fields[0] == "delta" && want_delta) {
      if (s.has_delta) bad(l.number, "duplicate delta line");
      if (l.fields.size() != 2) bad(l.number, "delta line needs one token");
      s.delta = l.fields[1];
      s.has_delta = true;
    } else if (l.fields[0] == "con") {
      if (l.fields.size() < 2 || l.fields[1] != ":") bad(l.number, "expected 'con :'");
      std::vector<std::string> body(l.fields.begin() + 2, l.fields.end());
      s.cons.emplace_back(l.number, std::move(body));
    } else if (l.fields[0] == "ent") {
      std::size_t colon = 0;
      for (std::size_t f = 1; f < l.fields.size(); ++f)
        if (l.fields[f] == ":") {
          colon = f;
          break;
        }
      if (colon == 0 || colon + 2 != l.fields.size())
        bad(l.number, "expected 'ent <body> : <token>'");
      FlatLines::EntLine e{l.number, {l.fields.begin() + 1, l.fields.begin() + colon},
                           l.fields[colon + 1]};
      s.ents.push_back(std::move(e));
    } else
      bad(l.number, "unknown directive '" + l.fields[0] + "'");
  }
  if (s.tokens.empty()) bad(lines[0].number, "missing tokens line");
  if (want_delta && !s.has_delta) bad(lines[0].number, "missing delta line");
}

int flat_token(const FlatLines& s, int line, const std::string& name) {
  for (std::size_t i = 0; i < s.tokens.size(); ++i)
    if (s.tokens[i] == name) return static_cast<int>(i);
  bad(line, "unknown token '" + name + "'");
}

void flat_build(const FlatLines& s, std::vector<Mask>& con, std::vector<Mask>& ent) {
  for (const auto& [line, body] : s.cons) {
    Mask m = 0;
    for (const std::string& t : body) m |= bit(flat_token(s, line, t));
    con.push_back(m);
    ent.push_back(0);
  }
  for (const auto& e : s.ents) {
    Mask b = 0;
    for (const std::string& t : e.body) b |= bit(flat_token(s, e.line, t));
    int a = flat_token(s, e.line, e.target);
    bool found = false;
    for (std::size_t k = 0; k < con.size(); ++k)
      if (con[k] == b) {
        ent[k] |= bit(a);
        found = true;
      }
    if (!found) bad(e.line, "entailment on an undeclared consistent set");
  }
}

Document parse_cis(const std::vector<Line>& lines) {
  FlatLines s;
  parse_flat(s, lines, false);
  std::vector<Mask> con, ent;
  flat_build(s, con, ent);
  Document d;
  d.kind = DocKind::CisDoc;
  d.cis = make_cis(s.tokens, std::move(con), std::move(ent));
  return d;
}

Document parse_ais(const std::vector<Line>& lines) {
  FlatLines s;
  parse_flat(s, lines, true);
  std::vector<Mask> con, ent;
  flat_build(s, con, ent);
  Document d;
  d.kind = DocKind::AisDoc;
  d.ais = make_ais(s.tokens, flat_token(s, lines[0].number, s.delta), std::move(con),
                   std::move(ent));
  return d;
}

Document parse_map(const std::vector<Line>& lines, const std::string& origin_dir) {
  std::string source_path, target_path;
  struct RelLine {
    int line;
    std::string witness;
    std::vector<std::string> body;
    std::string target;
  };
  std::vector<RelLine> rels;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.fields[0] == "source") {
      if (l.fields.size() != 2) bad(l.number, "source line needs a path");
      if (!source_path.empty()) bad(l.number, "duplicate source line");
      source_path = l.fields[1];
    } else if (l.fields[0] == "target") {
      if (l.fields.size() != 2) bad(l.number, "target line needs a path");
      if (!target_path.empty()) bad(l.number, "duplicate target line");
      target_path = l.fields[1];
    } else if (l.fields[0] == "rel") {
      if (l.fields.size() < 2) bad(l.number, "rel line needs a witness");
      if (l.fields.size() < 3 || l.fields[2] != ":") bad(l.number, "expected ':'");
      std::size_t second = 0;
      for (std::size_t f = 3; f < l.fields.size(); ++f)
        if (l.fields[f] == ":") {
          second = f;
          break;
        }
      if (second == 0 || second + 2 != l.fields.size())
        bad(l.number, "expected one related token after ':'");
      RelLine r{l.number, l.fields[1], {l.fields.begin() + 3, l.fields.begin() + second},
                l.fields[second + 1]};
      rels.push_back(std::move(r));
    } else
      bad(l.number, "unknown directive '" + l.fields[0] + "'");
  }
  if (source_path.empty()) bad(lines[0].number, "missing source line");
  if (target_path.empty()) bad(lines[0].number, "missing target line");
  namespace fs = std::filesystem;
  auto resolve = [&](const std::string& p) {
    fs::path q(p);
    if (q.is_absolute() || origin_dir.empty()) return p;
    return (fs::path(origin_dir) / q).string();
  };
  Document src = load_document(resolve(source_path));
  Document tgt = load_document(resolve(target_path));
  if (src.kind != DocKind::System)
    fail(Err::KindMismatch, "map source must be an isw document");
  if (tgt.kind != DocKind::System)
    fail(Err::KindMismatch, "map target must be an isw document");
  std::vector<Mask> rel(src.isw.con.size(), 0);
  for (const auto& r : rels) {
    int w = src.isw.token_index(r.witness);
    if (w < 0) bad(r.line, "unknown source token '" + r.witness + "'");
    Mask b = 0;
    for (const std::string& t : r.body) {
      int i = src.isw.token_index(t);
      if (i < 0) bad(r.line, "unknown source token '" + t + "'");
      b |= bit(i);
    }
    int k = src.isw.find_con(w, b);
    if (k < 0) bad(r.line, "rel on an undeclared source consistency entry");
    int a = tgt.isw.token_index(r.target);
    if (a < 0) bad(r.line, "unknown target token '" + r.target + "'");
    rel[k] |= bit(a);
  }
  Document d;
  d.kind = DocKind::MapDoc;
  d.map = make_map(src.isw, tgt.isw, std::move(rel));
  d.map_source_path = source_path;
  d.map_target_path = target_path;
  return d;
}

}  // namespace

Document parse_document(const std::string& text, const std::string& origin_dir) {
  std::vector<Line> lines = split_lines(text);
  if (lines.empty()) fail(Err::ParseError, "empty document");
  const Line& head = lines[0];
  if (head.fields[0] != "kind" || head.fields.size() != 2)
    bad(head.number, "first line must be 'kind <kind>'");
  const std::string& kind = head.fields[1];
  if (kind == "poset") return parse_poset(lines);
  if (kind == "isw") return parse_isw(lines);
  if (kind == "frame") return parse_frame(lines);
  if (kind == "cis") return parse_cis(lines);
  if (kind == "ais") return parse_ais(lines);
  if (kind == "map") return parse_map(lines, origin_dir);
  bad(head.number, "unknown kind '" + kind + "'");
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), std::filesystem::path(path).parent_path().string());
}

namespace {

std::string join_tokens(const std::vector<std::string>& names, Mask m) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (has_bit(m, static_cast<int>(i))) out += " " + names[i];
  return out;
}

}  // namespace

std::string serialize_poset(const FinPoset& P) {
  std::string out = "kind poset\nelems";
  for (const std::string& n : P.names) out += " " + n;
  out += "\n";
  int n = P.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !P.le(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z)
        if (z != x && z != y && P.le(x, z) && P.le(z, y)) cover = false;
      if (cover) out += "le " + P.names[x] + " " + P.names[y] + "\n";
    }
  return out;
}

std::string serialize_isw(const Isw& S) {
  std::string out = "kind isw\ntokens";
  for (const std::string& t : S.tokens) out += " " + t;
  out += "\ndelta " + S.tokens[S.delta] + "\n";
  for (const auto& c : S.con)
    out += "con " + S.tokens[c.witness] + " :" + join_tokens(S.tokens, c.body) + "\n";
  for (std::size_t k = 0; k < S.con.size(); ++k)
    for (int a = 0; a < S.size(); ++a)
      if (has_bit(S.ent[k], a))
        out += "ent " + S.tokens[S.con[k].witness] + " :" +
               join_tokens(S.tokens, S.con[k].body) + " : " + S.tokens[a] + "\n";
  return out;
}

std::string serialize_frame(const Frame& F) {
  std::string out = "kind frame\ntokens";
  for (const std::string& t : F.tokens) out += " " + t;
  out += "\ndelta " + F.tokens[F.delta] + "\n";
  for (int i = 0; i < F.size(); ++i)
    for (Mask b : F.nodes[i].bodies)
      out += "con@" + F.tokens[i] + " :" + join_tokens(F.tokens, b) + "\n";
  for (int i = 0; i < F.size(); ++i)
    for (std::size_t k = 0; k < F.nodes[i].bodies.size(); ++k)
      for (int a = 0; a < F.size(); ++a)
        if (has_bit(F.nodes[i].ent[k], a))
          out += "ent@" + F.tokens[i] + " :" + join_tokens(F.tokens, F.nodes[i].bodies[k]) +
                 " : " + F.tokens[a] + "\n";
  return out;
}

std::string serialize_cis(const Cis& C) {
  std::string out = "kind cis\ntokens";
  for (const std::string& t : C.tokens) out += " " + t;
  out += "\n";
  for (Mask b : C.con) out += "con :" + join_tokens(C.tokens, b) + "\n";
  for (std::size_t k = 0; k < C.con.size(); ++k)
    for (int a = 0; a < C.size(); ++a)
      if (has_bit(C.ent[k], a))
        out += "ent" + join_tokens(C.tokens, C.con[k]) + " : " + C.tokens[a] + "\n";
  return out;
}

std::string serialize_ais(const Ais& A) {
  std::string out = "kind ais\ntokens";
  for (const std::string& t : A.tokens) out += " " + t;
  out += "\ndelta " + A.tokens[A.delta] + "\n";
  for (Mask b : A.con) out += "con :" + join_tokens(A.tokens, b) + "\n";
  for (std::size_t k = 0; k < A.con.size(); ++k)
    for (int a = 0; a < A.size(); ++a)
      if (has_bit(A.ent[k], a))
        out += "ent" + join_tokens(A.tokens, A.con[k]) + " : " + A.tokens[a] + "\n";
  return out;
}

std::string serialize_map(const ApproxMap& H, const std::string& source_path,
                          const std::string& target_path) {
  std::string out = "kind map\nsource " + source_path + "\ntarget " + target_path + "\n";
  for (std::size_t k = 0; k < H.source.con.size(); ++k)
    for (int a = 0; a < H.target.size(); ++a)
      if (has_bit(H.rel[k], a))
        out += "rel " + H.source.tokens[H.source.con[k].witness] + " :" +
               join_tokens(H.source.tokens, H.source.con[k].body) + " : " +
               H.target.tokens[a] + "\n";
  return out;
}

Mask parse_token_set(const std::vector<std::string>& tokens, const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty() || s.front() != '{' || s.back() != '}')
    fail(Err::ParseError, "state must look like {a,b}");
  s = s.substr(1, s.size() - 2);
  Mask m = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos >= s.size()) break;
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const std::string& t = tokens[i];
      if (t.size() > best_len && s.compare(pos, t.size(), t) == 0)
        if (pos + t.size() == s.size() || s[pos + t.size()] == ',') {
          best = static_cast<int>(i);
          best_len = t.size();
        }
    }
    if (best < 0) fail(Err::ParseError, "unknown token in state at '" + s.substr(pos) + "'");
    m |= bit(best);
    pos += best_len;
    if (pos < s.size()) {
      if (s[pos] != ',') fail(Err::ParseError, "expected ',' in state");
      ++pos;
    }
  }
  return m;
}

}  // namespace iswb
