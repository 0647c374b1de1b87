#include "lamptree/portrait.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lamptree {

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (static_cast<std::size_t>(1) << 40) / base)
      fail(errc::level_too_deep, "portrait would have too many nodes");
    r *= base;
  }
  return r;
}

}  // namespace

Portrait::Portrait(std::vector<std::string> alphabet, int depth)
    : alphabet_(std::move(alphabet)), depth_(depth) {
  if (alphabet_.empty() || alphabet_.size() > 255) fail(errc::invalid_parameter, "bad alphabet");
  if (depth_ < 0) fail(errc::invalid_parameter, "negative depth");
  level_offsets_.assign(1, 0);
  for (int l = 0; l < depth_; ++l)
    level_offsets_.push_back(level_offsets_.back() + ipow(alphabet_.size(), l));
  perms_.resize(level_offsets_.back() * alphabet_.size());
  for (std::size_t node = 0; node < level_offsets_.back(); ++node)
    for (std::size_t a = 0; a < alphabet_.size(); ++a)
      perms_[node * alphabet_.size() + a] = static_cast<uint8_t>(a);
}

Portrait Portrait::identity(std::vector<std::string> alphabet, int depth) {
  return Portrait(std::move(alphabet), depth);
}

int Portrait::local(int level, std::size_t node, int a) const {
  if (level < 0 || level >= depth_) fail(errc::level_too_deep, "no locals at that level");
  if (node >= nodes_at(level)) fail(errc::invalid_parameter, "node index out of range");
  if (a < 0 || a >= alphabet_size()) fail(errc::symbol_out_of_range, "symbol index out of range");
  return perms_[(node_base(level) + node) * alphabet_.size() + static_cast<std::size_t>(a)];
}

std::vector<uint8_t> Portrait::local_perm(int level, std::size_t node) const {
  if (level < 0 || level >= depth_) fail(errc::level_too_deep, "no locals at that level");
  if (node >= nodes_at(level)) fail(errc::invalid_parameter, "node index out of range");
  return std::vector<uint8_t>(
      perms_.begin() + static_cast<std::ptrdiff_t>((node_base(level) + node) * alphabet_.size()),
      perms_.begin() + static_cast<std::ptrdiff_t>((node_base(level) + node + 1) * alphabet_.size()));
}

void Portrait::set_local(int level, std::size_t node, const std::vector<uint8_t>& perm) {
  if (level < 0 || level >= depth_) fail(errc::level_too_deep, "no locals at that level");
  if (node >= nodes_at(level)) fail(errc::invalid_parameter, "node index out of range");
  if (perm.size() != alphabet_.size()) fail(errc::invalid_parameter, "permutation size mismatch");
  std::vector<bool> hit(alphabet_.size(), false);
  for (uint8_t v : perm) {
    if (v >= alphabet_.size() || hit[v]) fail(errc::invalid_parameter, "not a permutation");
    hit[v] = true;
  }
  std::copy(perm.begin(), perm.end(),
            perms_.begin() + static_cast<std::ptrdiff_t>((node_base(level) + node) * alphabet_.size()));
}

std::vector<int> Portrait::apply(const std::vector<int>& word) const {
  if (static_cast<int>(word.size()) > depth_)
    fail(errc::word_too_long, "word longer than portrait depth");
  std::vector<int> out;
  out.reserve(word.size());
  std::size_t node = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    int a = word[i];
    if (a < 0 || a >= alphabet_size()) fail(errc::symbol_out_of_range, "symbol index out of range");
    out.push_back(perms_[(node_base(static_cast<int>(i)) + node) * alphabet_.size() +
                         static_cast<std::size_t>(a)]);
    node = node * alphabet_.size() + static_cast<std::size_t>(a);
  }
  return out;
}

namespace {

void require_same_shape(const Portrait& a, const Portrait& b) {
  if (a.alphabet() != b.alphabet()) fail(errc::alphabet_mismatch, "portrait alphabets differ");
  if (a.depth() != b.depth()) fail(errc::depth_mismatch, "portrait depths differ");
}

}  // namespace

Portrait Portrait::compose(const Portrait& other) const {
  require_same_shape(*this, other);
  Portrait out(alphabet_, depth_);
  const std::size_t asz = alphabet_.size();
  // img[node] = index of this portrait's image of the node's word, per level.
  std::vector<std::size_t> img{0};
  for (int l = 0; l < depth_; ++l) {
    std::vector<std::size_t> next_img(nodes_at(l) * asz);
    for (std::size_t node = 0; node < nodes_at(l); ++node) {
      std::vector<uint8_t> perm(asz);
      for (std::size_t a = 0; a < asz; ++a) {
        uint8_t mid = perms_[(node_base(l) + node) * asz + a];
        perm[a] = static_cast<uint8_t>(other.local(l, img[node], mid));
        next_img[node * asz + a] = img[node] * asz + mid;
      }
      out.set_local(l, node, perm);
    }
    img = std::move(next_img);
  }
  return out;
}

Portrait Portrait::inverse() const {
  Portrait out(alphabet_, depth_);
  const std::size_t asz = alphabet_.size();
  std::vector<std::size_t> img{0};
  for (int l = 0; l < depth_; ++l) {
    std::vector<std::size_t> next_img(nodes_at(l) * asz);
    for (std::size_t node = 0; node < nodes_at(l); ++node) {
      std::vector<uint8_t> inv(asz);
      for (std::size_t a = 0; a < asz; ++a) {
        uint8_t b = perms_[(node_base(l) + node) * asz + a];
        inv[b] = static_cast<uint8_t>(a);
        next_img[node * asz + a] = img[node] * asz + b;
      }
      out.set_local(l, img[node], inv);
    }
    img = std::move(next_img);
  }
  return out;
}

Portrait Portrait::cone(const std::vector<int>& u) const {
  if (static_cast<int>(u.size()) > depth_) fail(errc::word_too_long, "cone node deeper than portrait");
  const std::size_t asz = alphabet_.size();
  std::size_t base = 0;
  for (int a : u) {
    if (a < 0 || a >= alphabet_size()) fail(errc::symbol_out_of_range, "symbol index out of range");
    base = base * asz + static_cast<std::size_t>(a);
  }
  Portrait out(alphabet_, depth_ - static_cast<int>(u.size()));
  std::size_t stride = 1;
  for (int l = 0; l < out.depth_; ++l) {
    for (std::size_t node = 0; node < out.nodes_at(l); ++node) {
      std::size_t src = base * stride + node;
      std::vector<uint8_t> perm(
          perms_.begin() +
              static_cast<std::ptrdiff_t>((node_base(l + static_cast<int>(u.size())) + src) * asz),
          perms_.begin() +
              static_cast<std::ptrdiff_t>((node_base(l + static_cast<int>(u.size())) + src + 1) * asz));
      out.set_local(l, node, perm);
    }
    stride *= asz;
  }
  return out;
}

Portrait Portrait::mirror() const {
  if (alphabet_.size() != 2) fail(errc::non_binary_alphabet, "mirror needs a two-letter alphabet");
  Portrait out(alphabet_, depth_);
  for (int l = 0; l < depth_; ++l) {
    std::size_t n = nodes_at(l);
    for (std::size_t node = 0; node < n; ++node) {
      // The letterwise swap maps a node to the one with all digits flipped.
      std::size_t flipped = n - 1 - node;
      std::vector<uint8_t> perm(perms_.begin() + static_cast<std::ptrdiff_t>((node_base(l) + flipped) * 2),
                                perms_.begin() + static_cast<std::ptrdiff_t>((node_base(l) + flipped + 1) * 2));
      out.set_local(l, node, perm);
    }
  }
  return out;
}

bool Portrait::is_level_identity(int n) const {
  if (n < 0 || n > depth_) fail(errc::level_too_deep, "level outside portrait depth");
  const std::size_t asz = alphabet_.size();
  for (std::size_t i = 0; i < node_base(n) * asz; ++i)
    if (perms_[i] != i % asz) return false;
  return true;
}

bool Portrait::operator==(const Portrait& o) const {
  return alphabet_ == o.alphabet_ && depth_ == o.depth_ && perms_ == o.perms_;
}

std::string Portrait::serialize() const {
  bool single_char = true;
  for (const auto& s : alphabet_)
    if (s.size() != 1) single_char = false;
  const std::size_t asz = alphabet_.size();
  std::ostringstream os;
  for (int l = 0; l < depth_; ++l) {
    for (std::size_t node = 0; node < nodes_at(l); ++node) {
      if (l == 0) {
        os << '-';
      } else {
        // Decode the node index into its word, most significant digit first.
        std::vector<std::size_t> digits(static_cast<std::size_t>(l));
        std::size_t v = node;
        for (int i = l - 1; i >= 0; --i) {
          digits[static_cast<std::size_t>(i)] = v % asz;
          v /= asz;
        }
        for (std::size_t i = 0; i < digits.size(); ++i) {
          if (i && !single_char) os << ',';
          os << alphabet_[digits[i]];
        }
      }
      for (std::size_t a = 0; a < asz; ++a)
        os << ' ' << alphabet_[perms_[(node_base(l) + node) * asz + a]];
      os << '\n';
    }
  }
  return os.str();
}

Portrait portrait_of(const MealyMachine& m, const StateWord& w, int depth) {
  bool needs_inverse = false;
  for (const auto& l : w)
    if (l.exponent < 0) needs_inverse = true;
  std::optional<MealyMachine> inv;
  if (needs_inverse) inv.emplace(m.inverted());
  std::vector<const MealyMachine*> machines;
  for (const auto& l : w) machines.push_back(l.exponent < 0 ? &*inv : &m);

  Portrait out(m.alphabet(), depth);
  const std::size_t asz = m.alphabet().size();
  std::vector<std::vector<int16_t>> tuples(1);
  for (const auto& l : w) tuples[0].push_back(static_cast<int16_t>(l.state));
  for (int l = 0; l < depth; ++l) {
    std::vector<std::vector<int16_t>> next;
    next.reserve(tuples.size() * asz);
    for (std::size_t node = 0; node < tuples.size(); ++node) {
      std::vector<uint8_t> perm(asz);
      for (std::size_t a = 0; a < asz; ++a) {
        std::vector<int16_t> child(tuples[node].size());
        int sym = static_cast<int>(a);
        for (std::size_t i = 0; i < tuples[node].size(); ++i) {
          const MealyMachine* mm = machines[i];
          int q = tuples[node][i];
          child[i] = static_cast<int16_t>(mm->next_state(q, sym));
          sym = mm->output(q, sym);
        }
        perm[a] = static_cast<uint8_t>(sym);
        if (l + 1 < depth) next.push_back(std::move(child));
      }
      out.set_local(l, node, perm);
    }
    tuples = std::move(next);
  }
  return out;
}

double PortraitDistance::value() const {
  return std::ldexp(1.0, determinate ? -(level + 1) : -level);
}

std::string PortraitDistance::to_string() const {
  std::ostringstream os;
  if (determinate)
    os << "2^-" << (level + 1);
  else
    os << "<=2^-" << level;
  return os.str();
}

PortraitDistance depth_distance(const Portrait& a, const Portrait& b) {
  require_same_shape(a, b);
  const std::size_t asz = a.alphabet().size();
  std::size_t nodes = 1;
  for (int l = 0; l < a.depth(); ++l) {
    for (std::size_t node = 0; node < nodes; ++node)
      for (std::size_t x = 0; x < asz; ++x)
        if (a.local(l, node, static_cast<int>(x)) != b.local(l, node, static_cast<int>(x)))
          return PortraitDistance{true, l};
    nodes *= asz;
  }
  return PortraitDistance{false, a.depth()};
}

}  // namespace lamptree
