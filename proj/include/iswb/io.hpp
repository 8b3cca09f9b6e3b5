#pragma once

#include <string>
#include <vector>

#include "iswb/appmap.hpp"
#include "iswb/classic.hpp"
#include "iswb/frame.hpp"
#include "iswb/isw.hpp"
#include "iswb/poset.hpp"

namespace iswb {

// Line-oriented documents. '#' starts a comment, blank lines are skipped,
// the first payload line names the kind. Serialization is canonical: parse
// then serialize is the identity on serialized output.
enum class DocKind { Poset, System, FrameDoc, CisDoc, AisDoc, MapDoc };

const char* doc_kind_name(DocKind k);

struct Document {
  DocKind kind;
  FinPoset poset;
  Isw isw;
  Frame frame;
  Cis cis;
  Ais ais;
  ApproxMap map;
  std::string map_source_path, map_target_path;  // as written in the map file
};

Document load_document(const std::string& path);
Document parse_document(const std::string& text, const std::string& origin_dir);

std::string serialize_poset(const FinPoset& P);
std::string serialize_isw(const Isw& S);
std::string serialize_frame(const Frame& F);
std::string serialize_cis(const Cis& C);
std::string serialize_ais(const Ais& A);
std::string serialize_map(const ApproxMap& H, const std::string& source_path,
                          const std::string& target_path);

// "{a,b}" with greedy longest-name matching, so token names may contain
// commas.
Mask parse_token_set(const std::vector<std::string>& tokens, const std::string& text);

}  // namespace iswb
