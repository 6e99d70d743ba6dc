#include "pbw/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <mutex>
#include <numeric>

#include "pbw/error.hpp"

namespace pbw {

TypeRank TypeRank::make(char letter, int rank) {
  TypeRank tr;
  switch (std::toupper(static_cast<unsigned char>(letter))) {
    case 'A':
      tr.family = Family::A;
      if (rank < 1) throw Error("type A needs rank >= 1");
      break;
    case 'B':
      tr.family = Family::B;
      if (rank < 2) throw Error("type B needs rank >= 2");
      break;
    case 'C':
      tr.family = Family::C;
      if (rank < 2) throw Error("type C needs rank >= 2");
      break;
    case 'D':
      tr.family = Family::D;
      if (rank < 3) throw Error("type D needs rank >= 3");
      break;
    default:
      throw Error(std::string("unsupported Cartan type '") + letter + "'");
  }
  tr.rank = rank;
  return tr;
}

TypeRank TypeRank::parse(std::string_view text) {
  if (text.size() < 2) throw Error("malformed type: '" + std::string(text) + "'");
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw Error("malformed type: '" + std::string(text) + "'");
  return make(text[0], rank);
}

std::string TypeRank::name() const { return std::string(1, letter()) + std::to_string(rank); }

Root Root::simple(int rank, Node i) {
  Root r = zero(rank);
  r.coeffs_[i - 1] = 1;
  return r;
}

int Root::height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

bool Root::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

Root& Root::operator+=(const Root& other) {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

Root& Root::operator-=(const Root& other) {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

Root operator-(Root a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Root operator*(int k, Root a) {
  for (auto& c : a.coeffs_) c *= k;
  return a;
}

std::string to_dotted(const Root& root) {
  std::string out;
  for (Node i = 1; i <= root.rank(); ++i) {
    if (i > 1) out += '.';
    out += std::to_string(root.coeff(i));
  }
  return out;
}

std::string to_compact(const Root& root) {
  auto coeffs = root.coeffs();
  if (root.rank() > 9 || std::any_of(coeffs.begin(), coeffs.end(), [](int c) { return c < 0; }))
    return to_dotted(root);
  std::string out;
  for (Node i = 1; i <= root.rank(); ++i) out.append(root.coeff(i), static_cast<char>('0' + i));
  return out;
}

Root parse_root(std::string_view text, int rank) {
  auto bad = [&] { return Error("malformed root '" + std::string(text) + "' for rank " + std::to_string(rank)); };
  if (text.empty()) throw bad();
  std::vector<int> coeffs(rank, 0);
  if (text.find('.') != std::string_view::npos) {
    std::size_t k = 0;
    std::size_t start = 0;
    while (true) {
      auto stop = text.find('.', start);
      auto piece = text.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start);
      if (k >= coeffs.size() || piece.empty()) throw bad();
      auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), coeffs[k]);
      if (ec != std::errc() || ptr != piece.data() + piece.size()) throw bad();
      ++k;
      if (stop == std::string_view::npos) break;
      start = stop + 1;
    }
    if (k != coeffs.size()) throw bad();
  } else {
    if (rank > 9) throw bad();
    for (char ch : text) {
      if (ch < '1' || ch > '9' || ch - '0' > rank) throw bad();
      ++coeffs[ch - '1'];
    }
  }
  return Root(std::move(coeffs));
}

CartanData cartan_data(TypeRank tr) {
  tr = TypeRank::make(tr.letter(), tr.rank);
  const int n = tr.rank;
  CartanData cd;
  cd.rank = n;
  cd.matrix.assign(n * n, 0);
  cd.symmetrizer.assign(n, 1);
  auto set = [&](Node i, Node j, int v) { cd.matrix[(i - 1) * n + (j - 1)] = v; };
  for (Node i = 1; i <= n; ++i) set(i, i, 2);

  switch (tr.family) {
    case Family::A:
      for (Node i = 1; i < n; ++i) set(i, i + 1, -1), set(i + 1, i, -1);
      break;
    case Family::B:
      // alpha_n short
      for (Node i = 1; i < n - 1; ++i) set(i, i + 1, -1), set(i + 1, i, -1);
      set(n - 1, n, -1);
      set(n, n - 1, -2);
      for (Node i = 1; i < n; ++i) cd.symmetrizer[i - 1] = 2;
      break;
    case Family::C:
      // alpha_n long
      for (Node i = 1; i < n - 1; ++i) set(i, i + 1, -1), set(i + 1, i, -1);
      set(n - 1, n, -2);
      set(n, n - 1, -1);
      cd.symmetrizer[n - 1] = 2;
      break;
    case Family::D:
      for (Node i = 1; i < n - 1; ++i) set(i, i + 1, -1), set(i + 1, i, -1);
      set(n - 2, n, -1);
      set(n, n - 2, -1);
      break;
  }
  return cd;
}

std::size_t expected_num_positive(TypeRank tr) {
  const std::size_t n = tr.rank;
  switch (tr.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
  }
  return 0;
}

RootSystem::RootSystem(TypeRank tr) : label_(tr.name()), type_(tr), cartan_(cartan_data(tr)) { build(); }

RootSystem::RootSystem(std::string label, CartanData cartan) : label_(std::move(label)), cartan_(std::move(cartan)) {
  const int n = cartan_.rank;
  if (n < 1 || static_cast<int>(cartan_.matrix.size()) != n * n || static_cast<int>(cartan_.symmetrizer.size()) != n)
    throw Error("malformed Cartan data");
  for (Node i = 1; i <= n; ++i) {
    if (cartan_.a(i, i) != 2 || cartan_.d(i) <= 0) throw Error("malformed Cartan data");
    for (Node j = 1; j <= n; ++j) {
      if (i != j && cartan_.a(i, j) > 0) throw Error("malformed Cartan data");
      if (cartan_.d(i) * cartan_.a(i, j) != cartan_.d(j) * cartan_.a(j, i))
        throw Error("Cartan matrix is not symmetrized by d");
    }
  }
  build();
}

std::shared_ptr<const RootSystem> RootSystem::get(TypeRank tr) {
  static std::mutex mutex;
  static std::map<TypeRank, std::shared_ptr<const RootSystem>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[tr];
  if (!slot) slot = std::make_shared<const RootSystem>(tr);
  return slot;
}

void RootSystem::build() {
  const int n = rank();
  std::vector<Root> found;
  std::map<Root, int> seen;
  std::deque<Root> queue;
  for (Node i = 1; i <= n; ++i) {
    Root s = Root::simple(n, i);
    seen.emplace(s, 0);
    found.push_back(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Root beta = std::move(queue.front());
    queue.pop_front();
    for (Node i = 1; i <= n; ++i) {
      Root gamma = reflect(i, beta);
      if (!gamma.is_positive() || seen.count(gamma)) continue;
      if (found.size() > 10000) throw Error("root closure does not terminate; Cartan matrix not of finite type");
      seen.emplace(gamma, 0);
      found.push_back(gamma);
      queue.push_back(std::move(gamma));
    }
  }
  std::sort(found.begin(), found.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a > b;
  });
  positive_ = std::move(found);

  const std::size_t N = positive_.size();
  for (std::size_t k = 0; k < N; ++k) index_.emplace(positive_[k], static_cast<RootId>(k));
  simple_ids_.resize(n);
  for (Node i = 1; i <= n; ++i) simple_ids_[i - 1] = index_.at(Root::simple(n, i));

  gram_.resize(N * N);
  sums_.assign(N * N, -1);
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) {
      gram_[a * N + b] = bilinear(positive_[a], positive_[b]);
      if (auto s = find(positive_[a] + positive_[b])) sums_[a * N + b] = static_cast<std::int32_t>(*s);
    }
  }
}

std::optional<RootId> RootSystem::find(const Root& root) const {
  if (root.rank() != rank()) return std::nullopt;
  auto it = index_.find(root);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<RootId> RootSystem::sum(RootId a, RootId b) const {
  auto s = sums_[a * num_positive() + b];
  if (s < 0) return std::nullopt;
  return static_cast<RootId>(s);
}

int RootSystem::pairing(Node i, const Root& beta) const {
  int total = 0;
  for (Node j = 1; j <= rank(); ++j) total += cartan_.a(i, j) * beta.coeff(j);
  return total;
}

int RootSystem::bilinear(const Root& beta, const Root& gamma) const {
  int total = 0;
  for (Node i = 1; i <= rank(); ++i) {
    if (beta.coeff(i) == 0) continue;
    for (Node j = 1; j <= rank(); ++j)
      total += beta.coeff(i) * gamma.coeff(j) * cartan_.d(i) * cartan_.a(i, j);
  }
  return total;
}

Root RootSystem::reflect(Node i, const Root& beta) const {
  Root out = beta;
  out -= pairing(i, beta) * Root::simple(rank(), i);
  return out;
}

}  // namespace pbw
