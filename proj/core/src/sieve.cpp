#include "finsite/sieve.hpp"

#include <algorithm>

#include "finsite/errors.hpp"

namespace finsite {

  std::vector<MorphismIndex> Sieve::members() const {
    std::vector<MorphismIndex> out;
    for (auto i = members_.find_first(); i != boost::dynamic_bitset<>::npos; i = members_.find_next(i)) {
      out.push_back(i);
    }
    return out;
  }

  bool operator<(Sieve const& a, Sieve const& b) {
    if (a.target_ != b.target_) {
      return a.target_ < b.target_;
    }
    auto na = a.size();
    auto nb = b.size();
    if (na != nb) {
      return na < nb;
    }
    return a.members() < b.members();
  }

  bool is_sieve(FiniteCategory const& cat, ObjectIndex x, boost::dynamic_bitset<> const& members) {
    if (members.size() != cat.morphism_count()) {
      return false;
    }
    for (auto u = members.find_first(); u != boost::dynamic_bitset<>::npos; u = members.find_next(u)) {
      if (cat.cod(u) != x) {
        return false;
      }
      for (MorphismIndex v : cat.into(cat.dom(u))) {
        if (!members.test(cat.compose(u, v))) {
          return false;
        }
      }
    }
    return true;
  }

  Sieve make_sieve(FiniteCategory const& cat, ObjectIndex x, std::span<MorphismIndex const> members) {
    boost::dynamic_bitset<> bits(cat.morphism_count());
    for (auto f : members) {
      if (f >= cat.morphism_count()) {
        throw InvalidData("sieve member index out of range");
      }
      bits.set(f);
    }
    if (!is_sieve(cat, x, bits)) {
      throw InvalidData("morphisms do not form a sieve on " + cat.object_name(x));
    }
    return Sieve(x, std::move(bits));
  }

  Sieve maximal_sieve(FiniteCategory const& cat, ObjectIndex x) {
    boost::dynamic_bitset<> bits(cat.morphism_count());
    for (auto f : cat.into(x)) {
      bits.set(f);
    }
    return Sieve(x, std::move(bits));
  }

  Sieve empty_sieve(FiniteCategory const& cat, ObjectIndex x) {
    return Sieve(x, boost::dynamic_bitset<>(cat.morphism_count()));
  }

  Sieve generated_sieve(FiniteCategory const& cat, ObjectIndex x, std::span<MorphismIndex const> generators) {
    boost::dynamic_bitset<> bits(cat.morphism_count());
    for (auto u : generators) {
      if (cat.cod(u) != x) {
        throw PreconditionError("generator " + cat.morphism_name(u) + " does not end at " + cat.object_name(x));
      }
      for (auto v : cat.into(cat.dom(u))) {
        bits.set(cat.compose(u, v));
      }
    }
    return Sieve(x, std::move(bits));
  }

  namespace {

    // Include/exclude backtracking over the morphisms into x. Including u
    // forces the sieve generated by u; excluding u forces out every morphism
    // whose generated sieve contains u.
    void extend(std::vector<MorphismIndex> const& arrows, std::size_t pos, std::vector<boost::dynamic_bitset<>> const& gen,
                std::vector<boost::dynamic_bitset<>> const& above, boost::dynamic_bitset<> in,
                boost::dynamic_bitset<> out, ObjectIndex x, std::vector<Sieve>& result) {
      while (pos < arrows.size() && (in.test(arrows[pos]) || out.test(arrows[pos]))) {
        ++pos;
      }
      if (pos == arrows.size()) {
        result.emplace_back(x, std::move(in));
        return;
      }
      auto with = in | gen[pos];
      if (!with.intersects(out)) {
        extend(arrows, pos + 1, gen, above, std::move(with), out, x, result);
      }
      auto without = out | above[pos];
      if (!without.intersects(in)) {
        extend(arrows, pos + 1, gen, above, std::move(in), std::move(without), x, result);
      }
    }

  }  // namespace

  std::vector<Sieve> sieves_on(FiniteCategory const& cat, ObjectIndex x) {
    if (x >= cat.object_count()) {
      throw PreconditionError("unknown object index");
    }
    std::vector<MorphismIndex> arrows(cat.into(x).begin(), cat.into(x).end());
    std::size_t const m = cat.morphism_count();
    std::vector<boost::dynamic_bitset<>> gen;
    for (auto u : arrows) {
      gen.push_back(generated_sieve(cat, x, std::span<MorphismIndex const>(&u, 1)).bits());
    }
    std::vector<boost::dynamic_bitset<>> above(arrows.size(), boost::dynamic_bitset<>(m));
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      for (std::size_t j = 0; j < arrows.size(); ++j) {
        if (gen[j].test(arrows[i])) {
          above[i].set(arrows[j]);
        }
      }
    }
    std::vector<Sieve> result;
    extend(arrows, 0, gen, above, boost::dynamic_bitset<>(m), boost::dynamic_bitset<>(m), x, result);
    std::sort(result.begin(), result.end());
    return result;
  }

  Sieve pullback_sieve(FiniteCategory const& cat, Sieve const& s, MorphismIndex f) {
    if (cat.cod(f) != s.target()) {
      throw PreconditionError("cannot pull back a sieve on " + cat.object_name(s.target()) + " along "
                              + cat.morphism_name(f));
    }
    boost::dynamic_bitset<> bits(cat.morphism_count());
    for (auto g : cat.into(cat.dom(f))) {
      if (s.contains(cat.compose(f, g))) {
        bits.set(g);
      }
    }
    return Sieve(cat.dom(f), std::move(bits));
  }

  Sieve intersect(Sieve const& a, Sieve const& b) {
    if (a.target() != b.target()) {
      throw PreconditionError("intersecting sieves on different objects");
    }
    return Sieve(a.target(), a.bits() & b.bits());
  }

  std::string format_sieve(FiniteCategory const& cat, Sieve const& s) {
    if (s.size() == cat.into(s.target()).size()) {
      return "Hom(-," + cat.object_name(s.target()) + ")";
    }
    std::string out = "{";
    bool first = true;
    for (auto f : s.members()) {
      out += (first ? "" : ",") + cat.morphism_name(f);
      first = false;
    }
    return out + "}";
  }

}  // namespace finsite
