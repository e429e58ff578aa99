#pragma once

// Reference implementations used only by tests. They are deliberately naive
// and share no code with the library: ASCII-only text handling, quadratic
// pair scans, breadth-first components.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "scout/core/types.hpp"

namespace oracle {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline bool is_ascii(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

/// Byte trigram embedding; matches the stub embedder on ASCII input.
inline std::vector<double> embed_ascii(const std::string& text) {
  if (!is_ascii(text)) throw std::invalid_argument("oracle embedder is ASCII-only");
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  std::vector<double> v(256, 0.0);
  if (lower.size() < 3) return v;
  for (std::size_t i = 0; i + 3 <= lower.size(); ++i) v[fnv1a(lower.substr(i, 3)) % 256] += 1.0;
  double n = 0.0;
  for (double x : v) n += x * x;
  n = std::sqrt(n);
  for (double& x : v) x /= n;
  return v;
}

inline double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double ab = 0.0, aa = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  if (aa == 0.0 || bb == 0.0) return 0.0;
  return ab / std::sqrt(aa * bb);
}

inline std::string canonical_id(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    if (std::isalnum(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::toupper(c)));
  }
  return out;
}

inline std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::set<std::string> shingles(const std::string& s, std::size_t k) {
  const auto w = words(s);
  std::set<std::string> out;
  for (std::size_t i = 0; i + k <= w.size(); ++i) {
    std::string sh;
    for (std::size_t j = i; j < i + k; ++j) sh += (j == i ? "" : " ") + w[j];
    out.insert(sh);
  }
  return out;
}

inline double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::vector<std::string> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return static_cast<double>(common.size()) / static_cast<double>(a.size() + b.size() - common.size());
}

struct Survivor {
  std::string canonical_id;
  std::string raw_id;
  std::string title;
  std::string abstract;
  std::set<std::string> cited;
  std::int64_t forward_citations = 0;
  auto key() const { return std::tie(canonical_id, raw_id, title, abstract, cited, forward_citations); }
  friend bool operator==(const Survivor& a, const Survivor& b) { return a.key() == b.key(); }
};

struct DedupOutcome {
  std::map<std::string, Survivor> survivors;  // by canonical id
  std::set<std::pair<std::string, std::string>> exact;
  std::map<std::pair<std::string, std::string>, double> near;
};

/// Exact grouping by canonical id, then every pair of survivors is compared
/// and the similarity graph's components are found by BFS.
inline DedupOutcome dedup(const std::vector<scout::PatentDocument>& docs, std::size_t k, double threshold) {
  DedupOutcome out;
  std::vector<const scout::PatentDocument*> keepers;
  std::vector<std::set<std::string>> cited;
  std::vector<std::int64_t> fwd;
  std::vector<bool> grouped(docs.size(), false);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (grouped[i]) continue;
    const std::string id = canonical_id(docs[i].raw_id);
    std::vector<std::size_t> group;
    for (std::size_t j = i; j < docs.size(); ++j) {
      if (!grouped[j] && canonical_id(docs[j].raw_id) == id) {
        grouped[j] = true;
        group.push_back(j);
      }
    }
    std::size_t best = group[0];
    for (std::size_t g : group) {
      const auto& a = docs[g];
      const auto& b = docs[best];
      if (std::tie(a.filing_date, a.raw_id, a.title, a.abstract, a.claims, a.description) <
          std::tie(b.filing_date, b.raw_id, b.title, b.abstract, b.claims, b.description)) {
        best = g;
      }
    }
    std::set<std::string> c;
    std::int64_t f = 0;
    for (std::size_t g : group) {
      c.insert(docs[g].cited_ids.begin(), docs[g].cited_ids.end());
      f = std::max(f, docs[g].forward_citations);
      if (g != best) out.exact.insert({id, docs[g].raw_id});
    }
    keepers.push_back(&docs[best]);
    cited.push_back(c);
    fwd.push_back(f);
  }

  const std::size_t n = keepers.size();
  std::vector<std::set<std::string>> sh(n);
  for (std::size_t i = 0; i < n; ++i) sh[i] = shingles(keepers[i]->title + " " + keepers[i]->abstract, k);
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (jaccard(sh[i], sh[j]) >= threshold) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      comp.push_back(u);
      for (auto v : adj[u]) {
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
      }
    }
    std::size_t keep = comp[0];
    for (auto m : comp) {
      const auto ida = canonical_id(keepers[m]->raw_id);
      const auto idb = canonical_id(keepers[keep]->raw_id);
      if (std::tie(keepers[m]->filing_date, ida) < std::tie(keepers[keep]->filing_date, idb)) keep = m;
    }
    Survivor sv;
    sv.canonical_id = canonical_id(keepers[keep]->raw_id);
    sv.raw_id = keepers[keep]->raw_id;
    sv.title = keepers[keep]->title;
    sv.abstract = keepers[keep]->abstract;
    for (auto m : comp) {
      sv.cited.insert(cited[m].begin(), cited[m].end());
      sv.forward_citations = std::max(sv.forward_citations, fwd[m]);
      if (m != keep) out.near[{sv.canonical_id, canonical_id(keepers[m]->raw_id)}] = jaccard(sh[keep], sh[m]);
    }
    out.survivors[sv.canonical_id] = sv;
  }
  return out;
}

/// Documents whose lowercased title + " " + abstract contains every term.
inline std::vector<std::string> grep_ids(const std::vector<scout::PatentDocument>& corpus,
                                         const std::vector<std::string>& terms) {
  std::vector<std::string> out;
  for (const auto& d : corpus) {
    std::string hay;
    for (char c : d.title + " " + d.abstract) hay.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    bool all = !terms.empty();
    for (const auto& t : terms) all = all && hay.find(t) != std::string::npos;
    if (all) out.push_back(d.raw_id);
  }
  return out;
}

inline std::vector<double> mean(const std::vector<std::vector<double>>& pts) {
  std::vector<double> m(pts.at(0).size(), 0.0);
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < p.size(); ++i) m[i] += p[i];
  }
  for (double& x : m) x /= static_cast<double>(pts.size());
  return m;
}

inline double sse(const std::vector<std::vector<double>>& pts, const std::vector<double>& c) {
  double s = 0.0;
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - c[i]) * (p[i] - c[i]);
  }
  return s;
}

inline double novelty(double age_years, double citations) {
  return 0.5 * std::exp(-age_years / 10.0) + 0.5 / (1.0 + citations);
}

}  // namespace oracle
