#include "symmaj/groups.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symmaj {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a)
    return kSaturated;
  return a * b;
}

std::uint64_t saturating_factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i)
    f = saturating_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

int parse_point(std::string const &token) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (std::exception const &) {
    used = 0;
  }
  if (used != token.size() || token.empty())
    throw std::invalid_argument("bad partition member '" + token + "'");
  return value;
}

// All permutations of degree k preserving every block, sorted.
std::vector<Permutation> block_preserving(Partition const &partition) {
  std::vector<std::vector<int>> images{std::vector<int>(
      static_cast<std::size_t>(partition.ground()))};
  std::iota(images.front().begin(), images.front().end(), 1);
  for (auto const &block : partition.blocks()) {
    if (block.size() < 2)
      continue;
    std::vector<std::vector<int>> next;
    std::vector<int> arrangement = block;
    do {
      for (auto const &base : images) {
        auto extended = base;
        for (std::size_t i = 0; i < block.size(); ++i)
          extended[static_cast<std::size_t>(block[i] - 1)] = arrangement[i];
        next.push_back(std::move(extended));
      }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    images = std::move(next);
  }
  std::vector<Permutation> out;
  out.reserve(images.size());
  for (auto &im : images)
    out.emplace_back(std::move(im));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

Partition::Partition(int ground, std::vector<std::vector<int>> blocks)
    : ground_(ground), blocks_(std::move(blocks)) {
  if (ground_ < 1)
    throw std::invalid_argument("partition ground set must be nonempty");
  std::vector<bool> seen(static_cast<std::size_t>(ground_), false);
  int covered = 0;
  for (auto &block : blocks_) {
    if (block.empty())
      throw std::invalid_argument("partition has an empty block");
    std::sort(block.begin(), block.end());
    for (int x : block) {
      if (x < 1 || x > ground_)
        throw std::invalid_argument("partition member " + std::to_string(x) +
                                    " outside {1.." + std::to_string(ground_) + "}");
      if (seen[static_cast<std::size_t>(x - 1)])
        throw std::invalid_argument("partition blocks overlap at " + std::to_string(x));
      seen[static_cast<std::size_t>(x - 1)] = true;
      ++covered;
    }
  }
  if (covered != ground_)
    throw std::invalid_argument("partition does not cover {1.." +
                                std::to_string(ground_) + "}");
  std::sort(blocks_.begin(), blocks_.end());
}

Partition Partition::parse(std::string_view text, int ground) {
  std::vector<std::vector<int>> blocks;
  std::string body(text);
  std::stringstream blocks_in(body);
  std::string block_text;
  while (std::getline(blocks_in, block_text, '|')) {
    std::replace(block_text.begin(), block_text.end(), ',', ' ');
    std::istringstream members(block_text);
    std::vector<int> block;
    std::string token;
    while (members >> token)
      block.push_back(parse_point(token));
    blocks.push_back(std::move(block));
  }
  if (!body.empty() && body.back() == '|')
    blocks.emplace_back();
  return Partition(ground, std::move(blocks));
}

Partition Partition::whole(int ground) {
  std::vector<int> block(static_cast<std::size_t>(std::max(ground, 0)));
  std::iota(block.begin(), block.end(), 1);
  return Partition(ground, {block});
}

Partition Partition::singletons(int ground) {
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x <= ground; ++x)
    blocks.push_back({x});
  return Partition(ground, std::move(blocks));
}

int Partition::max_block_size() const {
  std::size_t best = 0;
  for (auto const &block : blocks_)
    best = std::max(best, block.size());
  return static_cast<int>(best);
}

int Partition::gcd_block_sizes() const {
  int g = 0;
  for (auto const &block : blocks_)
    g = std::gcd(g, static_cast<int>(block.size()));
  return g;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0)
      out += '|';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i > 0)
        out += ',';
      out += std::to_string(blocks_[b][i]);
    }
  }
  return out;
}

SubgroupSpec SubgroupSpec::partition_product(Partition committees, Partition classes,
                                             bool with_reversal) {
  int h = committees.ground();
  int n = classes.ground();
  return {h, n, PartitionProduct{std::move(committees), std::move(classes), with_reversal}};
}

SubgroupSpec SubgroupSpec::generated(int h, int n, std::vector<GroupElement> generators) {
  for (auto const &g : generators)
    if (g.h() != h || g.n() != n)
      throw std::invalid_argument("generator " + g.to_string() + " does not act on (h, n) = (" +
                                  std::to_string(h) + ", " + std::to_string(n) + ")");
  return {h, n, Generated{std::move(generators)}};
}

SubgroupSpec SubgroupSpec::full_triple(int h, int n, bool anonymous, bool neutral,
                                       bool with_reversal) {
  if (h < 1 || n < 1)
    throw std::invalid_argument("h and n must be positive");
  return {h, n, FullTriple{anonymous, neutral, with_reversal}};
}

SubgroupSpec SubgroupSpec::normalized() const {
  if (auto const *full = std::get_if<FullTriple>(&variant)) {
    return partition_product(full->anonymous ? Partition::whole(h) : Partition::singletons(h),
                             full->neutral ? Partition::whole(n) : Partition::singletons(n),
                             full->with_reversal);
  }
  return *this;
}

std::string SubgroupSpec::describe() const {
  std::string dims = "h=" + std::to_string(h) + ", n=" + std::to_string(n);
  if (auto const *pp = std::get_if<PartitionProduct>(&variant))
    return "V(" + pp->committees.to_string() + ") x W(" + pp->classes.to_string() + ") x " +
           (pp->with_reversal ? "Omega" : "{id}") + " [" + dims + "]";
  if (auto const *full = std::get_if<FullTriple>(&variant))
    return std::string(full->anonymous ? "S_h" : "{id}") + " x " +
           (full->neutral ? "S_n" : "{id}") + " x " +
           (full->with_reversal ? "Omega" : "{id}") + " [" + dims + "]";
  auto const &gen = std::get<Generated>(variant);
  std::string out = "<";
  for (std::size_t i = 0; i < gen.generators.size(); ++i) {
    if (i > 0)
      out += ", ";
    out += gen.generators[i].to_string();
  }
  return out + "> [" + dims + "]";
}

std::uint64_t product_order(SubgroupSpec const &spec) {
  SubgroupSpec normal = spec.normalized();
  auto const *pp = std::get_if<PartitionProduct>(&normal.variant);
  if (pp == nullptr)
    return 0;
  std::uint64_t total = pp->with_reversal ? 2 : 1;
  for (auto const &block : pp->committees.blocks())
    total = saturating_mul(total, saturating_factorial(static_cast<int>(block.size())));
  for (auto const &block : pp->classes.blocks())
    total = saturating_mul(total, saturating_factorial(static_cast<int>(block.size())));
  return total;
}

std::vector<GroupElement> elements(SubgroupSpec const &spec, std::uint64_t cap) {
  SubgroupSpec normal = spec.normalized();
  std::vector<GroupElement> out;

  if (auto const *pp = std::get_if<PartitionProduct>(&normal.variant)) {
    std::uint64_t required = product_order(normal);
    if (required > cap)
      throw ResourceError("subgroup " + spec.describe() + " too large to enumerate",
                          required, cap);
    auto phis = block_preserving(pp->committees);
    auto psis = block_preserving(pp->classes);
    out.reserve(static_cast<std::size_t>(required));
    for (auto const &phi : phis)
      for (auto const &psi : psis) {
        out.push_back({phi, psi, Rho::identity});
        if (pp->with_reversal)
          out.push_back({phi, psi, Rho::reversal});
      }
    return out;
  }

  auto const &gen = std::get<Generated>(normal.variant);
  std::set<GroupElement> seen{GroupElement::identity(spec.h, spec.n)};
  std::deque<GroupElement> frontier{GroupElement::identity(spec.h, spec.n)};
  while (!frontier.empty()) {
    GroupElement x = std::move(frontier.front());
    frontier.pop_front();
    for (auto const &g : gen.generators) {
      GroupElement y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw ResourceError("generated subgroup " + spec.describe() +
                                  " too large to enumerate",
                              cap + 1, cap);
        frontier.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

Group::Group(SubgroupSpec spec, std::uint64_t cap)
    : spec_(std::move(spec)), elements_(symmaj::elements(spec_, cap)) {}

std::vector<GroupElement> stabilizer(Group const &u, Profile const &p) {
  std::vector<GroupElement> out;
  for (auto const &g : u.elements())
    if (act(p, g) == p)
      out.push_back(g);
  return out;
}

std::vector<Profile> orbit(Group const &u, Profile const &p) {
  std::vector<Profile> out;
  out.reserve(u.elements().size());
  for (auto const &g : u.elements())
    out.push_back(act(p, g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CanonicalForm canonical_form(Group const &u, Profile const &p) {
  Profile best = p;
  GroupElement best_g = GroupElement::identity(u.h(), u.n());
  for (auto const &g : u.elements()) {
    Profile image = act(p, g);
    if (image < best) {
      best = std::move(image);
      best_g = g;
    }
  }
  // act(p, best_g) == best, hence act(best, best_g^{-1}) == p.
  return {std::move(best), best_g.inverse()};
}

ProfileSpace::ProfileSpace(int h, int n, std::uint64_t cap) : h_(h), n_(n) {
  if (h < 2 || n < 2)
    throw std::invalid_argument("profile spaces need h >= 2 and n >= 2");
  std::uint64_t orders = saturating_factorial(n);
  size_ = 1;
  for (int i = 0; i < h; ++i)
    size_ = saturating_mul(size_, orders);
  if (size_ > cap)
    throw ResourceError("profile space (n!)^h for h=" + std::to_string(h) +
                            ", n=" + std::to_string(n) + " exceeds enumeration cap",
                        size_, cap);
  for (auto const &perm : all_permutations(n))
    orders_.push_back(LinearOrder::from_permutation(perm));
  place_.assign(static_cast<std::size_t>(h), 1);
  for (int i = h - 2; i >= 0; --i)
    place_[static_cast<std::size_t>(i)] = place_[static_cast<std::size_t>(i + 1)] * orders;
}

std::uint32_t ProfileSpace::order_index(LinearOrder const &q) const {
  if (q.size() != n_)
    throw std::invalid_argument("order has the wrong number of alternatives");
  // Lehmer code of the ranking vector.
  std::uint32_t index = 0;
  std::vector<bool> used(static_cast<std::size_t>(n_), false);
  for (int r = 1; r <= n_; ++r) {
    int x = q.at_rank(r);
    std::uint32_t smaller = 0;
    for (int y = 1; y < x; ++y)
      if (!used[static_cast<std::size_t>(y - 1)])
        ++smaller;
    used[static_cast<std::size_t>(x - 1)] = true;
    index = index * static_cast<std::uint32_t>(n_ - r + 1) + smaller;
  }
  return index;
}

std::uint64_t ProfileSpace::encode(Profile const &p) const {
  if (p.h() != h_ || p.n() != n_)
    throw std::invalid_argument("profile dimensions do not match the profile space");
  std::uint64_t code = 0;
  for (int i = 1; i <= h_; ++i)
    code += order_index(p[i]) * place_[static_cast<std::size_t>(i - 1)];
  return code;
}

void ProfileSpace::digits(std::uint64_t code, std::vector<std::uint32_t> &out) const {
  out.resize(static_cast<std::size_t>(h_));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(code / place_[i]);
    code %= place_[i];
  }
}

std::uint64_t ProfileSpace::from_digits(std::vector<std::uint32_t> const &d) const {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    code += d[i] * place_[i];
  return code;
}

Profile ProfileSpace::decode(std::uint64_t code) const {
  std::vector<std::uint32_t> d;
  digits(code, d);
  std::vector<LinearOrder> columns;
  columns.reserve(d.size());
  for (auto digit : d)
    columns.push_back(orders_[digit]);
  return Profile(std::move(columns));
}

void ProfileSpace::for_each(
    std::function<void(std::uint64_t, Profile const &)> const &visit) const {
  for (std::uint64_t code = 0; code < size_; ++code)
    visit(code, decode(code));
}

CompiledElement::CompiledElement(ProfileSpace const &space, GroupElement const &g) {
  if (g.h() != space.h() || g.n() != space.n())
    throw std::invalid_argument("group element does not act on this profile space");
  Permutation phi_inv = g.phi.inverse();
  for (int i = 1; i <= space.h(); ++i)
    source_column_.push_back(phi_inv(i) - 1);
  for (auto const &q : space.orders())
    column_map_.push_back(space.order_index(left_mul(g.psi, right_mul(q, g.rho))));
}

void CompiledElement::apply(std::vector<std::uint32_t> const &in,
                            std::vector<std::uint32_t> &out) const {
  out.resize(in.size());
  for (std::size_t i = 0; i < in.size(); ++i)
    out[i] = column_map_[in[static_cast<std::size_t>(source_column_[i])]];
}

OrbitReport orbit_report(Group const &u, std::uint64_t profile_cap) {
  ProfileSpace space(u.h(), u.n(), profile_cap);
  std::vector<CompiledElement> compiled;
  compiled.reserve(u.elements().size());
  for (auto const &g : u.elements())
    compiled.emplace_back(space, g);

  OrbitReport report;
  std::vector<bool> visited(static_cast<std::size_t>(space.size()), false);
  std::vector<std::uint32_t> digits;
  std::vector<std::uint32_t> image;
  for (std::uint64_t code = 0; code < space.size(); ++code) {
    if (visited[static_cast<std::size_t>(code)])
      continue;
    // Codes are scanned in lexicographic order, so the first unvisited code
    // is the minimum of its orbit.
    space.digits(code, digits);
    std::uint64_t fixed = 0;
    std::uint64_t fresh = 0;
    for (auto const &g : compiled) {
      g.apply(digits, image);
      std::uint64_t target = space.from_digits(image);
      if (target == code)
        ++fixed;
      if (!visited[static_cast<std::size_t>(target)]) {
        visited[static_cast<std::size_t>(target)] = true;
        ++fresh;
      }
    }
    if (fixed == 0 || fresh * fixed != u.order())
      throw std::logic_error("orbit-stabilizer count failed; element list is not a group");
    report.representatives.push_back(space.decode(code));
    report.orbit_sizes.push_back(fresh);
    report.stabilizer_orders.push_back(fixed);
  }
  return report;
}

} // namespace symmaj
