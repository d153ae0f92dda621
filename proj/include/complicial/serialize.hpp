#ifndef COMPLICIAL_SERIALIZE_HPP
#define COMPLICIAL_SERIALIZE_HPP

#include <istream>
#include <ostream>
#include <sstream>

#include "complicial/anodyne.hpp"
#include "complicial/msset.hpp"

namespace complicial {

namespace detail {

inline std::string encode_ref(const SimplexRef& r) {
  std::string s;
  for (size_t i = 0; i < r.word.letters.size(); ++i) {
    if (i) s.push_back('.');
    s += std::to_string(r.word.letters[i]);
  }
  s.push_back(':');
  s += std::to_string(r.base_dim);
  s.push_back(':');
  s += std::to_string(r.base);
  return s;
}

inline SimplexRef decode_ref(const std::string& s) {
  size_t c1 = s.find(':');
  size_t c2 = s.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("malformed simplex reference: " + s);
  SimplexRef r;
  std::string word = s.substr(0, c1);
  size_t pos = 0;
  while (pos < word.size()) {
    size_t next = word.find('.', pos);
    if (next == std::string::npos) next = word.size();
    r.word.letters.push_back(std::stoi(word.substr(pos, next - pos)));
    pos = next + 1;
  }
  r.base_dim = std::stoi(s.substr(c1 + 1, c2 - c1 - 1));
  r.base = std::stoi(s.substr(c2 + 1));
  if (!r.word.descending())
    throw std::invalid_argument("degeneracy word not descending: " + s);
  return r;
}

}  // namespace detail

/// Lossless text form of a marked simplicial set. Stable field order,
/// decimal integers, one cell per line; labels are the trailing field and
/// must not contain newlines.
inline void encode(std::ostream& os, const MarkedSimplicialSet& X) {
  os << "mss 1\n";
  os << "truncation " << X.truncation() << "\n";
  os << "counts";
  for (Dim d = 0; d <= X.truncation(); ++d) os << " " << X.count(d);
  os << "\n";
  for (const auto& [name, v] : X.basepoints())
    os << "basepoint " << name << " " << v << "\n";
  for (Dim d = 0; d <= X.truncation(); ++d)
    for (CellId c = 0; c < X.count(d); ++c) {
      const auto& cell = X.cell(d, c);
      os << "cell " << d << " " << c << " " << (cell.marked ? 1 : 0) << " ";
      if (d == 0) {
        os << "-";
      } else {
        for (int a = 0; a <= d; ++a) {
          if (a) os << ",";
          os << detail::encode_ref(cell.faces[a]);
        }
      }
      os << " " << cell.label << "\n";
    }
  os << "end mss\n";
}

inline MarkedSimplicialSet decode_mss(std::istream& is) {
  std::string line, tok;
  auto next_line = [&]() {
    if (!std::getline(is, line))
      throw std::invalid_argument("unexpected end of complex file");
    return std::istringstream(line);
  };
  {
    auto ls = next_line();
    ls >> tok;
    if (tok != "mss") throw std::invalid_argument("not a complex file");
  }
  int truncation = -1;
  {
    auto ls = next_line();
    ls >> tok >> truncation;
    if (tok != "truncation" || truncation < 0)
      throw std::invalid_argument("bad truncation header");
  }
  std::vector<int> counts;
  {
    auto ls = next_line();
    ls >> tok;
    if (tok != "counts") throw std::invalid_argument("missing counts");
    int n;
    while (ls >> n) counts.push_back(n);
    if (static_cast<int>(counts.size()) != truncation + 1)
      throw std::invalid_argument("counts row length mismatch");
  }
  MarkedSimplicialSet X(truncation);
  std::map<std::string, CellId> basepoints;
  for (;;) {
    auto ls = next_line();
    ls >> tok;
    if (tok == "end") break;
    if (tok == "basepoint") {
      std::string name;
      CellId v;
      ls >> name >> v;
      basepoints[name] = v;
      continue;
    }
    if (tok != "cell") throw std::invalid_argument("unexpected line: " + line);
    int d, idx, marked;
    std::string faces;
    ls >> d >> idx >> marked >> faces;
    std::string label;
    std::getline(ls, label);
    if (!label.empty() && label.front() == ' ') label.erase(0, 1);
    if (d < 0 || d > truncation)
      throw std::invalid_argument("cell dimension out of range");
    if (idx != X.count(d))
      throw std::invalid_argument("cell ids must be dense and in order");
    if (d == 0) {
      X.add_vertex(label);
      continue;
    }
    std::vector<SimplexRef> frefs;
    size_t pos = 0;
    while (pos <= faces.size()) {
      size_t nextp = faces.find(',', pos);
      if (nextp == std::string::npos) nextp = faces.size();
      frefs.push_back(detail::decode_ref(faces.substr(pos, nextp - pos)));
      pos = nextp + 1;
    }
    if (static_cast<int>(frefs.size()) != d + 1)
      throw std::invalid_argument("face list length mismatch");
    for (const auto& f : frefs) {
      if (f.dim() != d - 1 || f.base_dim > truncation ||
          f.base >= X.count(f.base_dim))
        throw std::invalid_argument("dangling face reference");
    }
    X.add_cell(d, std::move(frefs), marked != 0, label);
  }
  for (Dim d = 0; d <= truncation; ++d)
    if (X.count(d) != counts[d])
      throw std::invalid_argument("cell count mismatch at dimension " +
                                  std::to_string(d));
  for (const auto& [name, v] : basepoints) {
    if (v < 0 || v >= X.count(0))
      throw std::invalid_argument("dangling basepoint");
    X.set_basepoint(name, v);
  }
  return X;
}

/// Simplicial map: both complexes followed by the assignment table.
inline void encode(std::ostream& os, const SimplicialMap& f) {
  os << "smap 1\n";
  encode(os, *f.source);
  encode(os, *f.target);
  for (Dim d = 0; d <= f.source->truncation(); ++d)
    for (CellId c = 0; c < f.source->count(d); ++c)
      os << "assign " << d << " " << c << " "
         << detail::encode_ref(f.at(d, c)) << "\n";
  os << "end smap\n";
}

inline SimplicialMap decode_smap(std::istream& is) {
  std::string line, tok;
  if (!std::getline(is, line) || line != "smap 1")
    throw std::invalid_argument("not a map file");
  SimplicialMap f;
  f.source = std::make_shared<MarkedSimplicialSet>(decode_mss(is));
  f.target = std::make_shared<MarkedSimplicialSet>(decode_mss(is));
  f.assign.resize(f.source->truncation() + 1);
  for (;;) {
    if (!std::getline(is, line))
      throw std::invalid_argument("unexpected end of map file");
    std::istringstream ls(line);
    ls >> tok;
    if (tok == "end") break;
    if (tok != "assign") throw std::invalid_argument("unexpected line: " + line);
    int d, c;
    std::string ref;
    ls >> d >> c >> ref;
    if (d < 0 || d > f.source->truncation() || c != static_cast<int>(f.assign[d].size()))
      throw std::invalid_argument("assignment out of order");
    f.assign[d].push_back(detail::decode_ref(ref));
  }
  auto bad = f.validate();
  if (!bad.empty())
    throw std::invalid_argument("decoded map invalid: " + bad.front());
  return f;
}

/// Certificate: header then one step per line.
inline void encode(std::ostream& os, const AnodyneCertificate& cert) {
  os << "cert 1\n";
  os << "theorem " << cert.theorem << "\n";
  os << "params " << cert.params << "\n";
  os << "dim " << cert.truncation << "\n";
  os << "mode " << (cert.marked_mode ? "marked" : "unmarked") << "\n";
  os << "steps " << cert.steps.size() << "\n";
  for (const auto& s : cert.steps) {
    os << "step " << (s.kind == CertStep::Kind::horn ? "horn" : "thin");
    os << " d " << s.d << " b " << s.b << " k " << s.k << " r " << s.r;
    os << " horn " << s.horn_dim << " " << s.horn_index;
    os << " variant " << (s.marked_variant ? "marked" : "plain");
    os << " filler " << s.filler << " face " << s.rface;
    os << " attach ";
    for (size_t i = 0; i < s.attach.size(); ++i) {
      if (i) os << ";";
      os << detail::encode_ref(s.attach[i]);
    }
    os << "\n";
  }
  os << "end cert\n";
}

inline AnodyneCertificate decode_cert(std::istream& is) {
  std::string line, tok;
  auto expect = [&](const std::string& key) {
    if (!std::getline(is, line))
      throw std::invalid_argument("unexpected end of certificate");
    std::istringstream ls(line);
    ls >> tok;
    if (tok != key) throw std::invalid_argument("expected " + key);
    std::string rest;
    std::getline(ls, rest);
    if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
    return rest;
  };
  if (expect("cert") != "1") throw std::invalid_argument("bad version");
  AnodyneCertificate cert;
  cert.theorem = expect("theorem");
  cert.params = expect("params");
  cert.truncation = std::stoi(expect("dim"));
  cert.marked_mode = expect("mode") == "marked";
  size_t nsteps = std::stoul(expect("steps"));
  for (size_t i = 0; i < nsteps; ++i) {
    if (!std::getline(is, line))
      throw std::invalid_argument("missing step line");
    std::istringstream ls(line);
    CertStep s;
    std::string kind, variant, key;
    ls >> tok >> kind;
    if (tok != "step") throw std::invalid_argument("expected step line");
    s.kind = kind == "horn" ? CertStep::Kind::horn : CertStep::Kind::thin;
    ls >> key >> s.d >> key >> s.b >> key >> s.k >> key >> s.r;
    ls >> key >> s.horn_dim >> s.horn_index;
    ls >> key >> variant;
    s.marked_variant = variant == "marked";
    ls >> key >> s.filler >> key >> s.rface;
    ls >> key;  // attach
    std::string blob;
    ls >> blob;
    if (!blob.empty()) {
      size_t pos = 0;
      while (pos <= blob.size()) {
        size_t next = blob.find(';', pos);
        if (next == std::string::npos) next = blob.size();
        s.attach.push_back(detail::decode_ref(blob.substr(pos, next - pos)));
        pos = next + 1;
        if (pos > blob.size()) break;
      }
    }
    cert.steps.push_back(std::move(s));
  }
  if (!std::getline(is, line) || line != "end cert")
    throw std::invalid_argument("missing certificate terminator");
  return cert;
}

inline std::string encode_to_string(const MarkedSimplicialSet& X) {
  std::ostringstream os;
  encode(os, X);
  return os.str();
}

inline std::string encode_to_string(const AnodyneCertificate& c) {
  std::ostringstream os;
  encode(os, c);
  return os.str();
}

inline std::string encode_to_string(const SimplicialMap& f) {
  std::ostringstream os;
  encode(os, f);
  return os.str();
}

}  // namespace complicial

#endif
