#ifndef CHORDWEAVE_ORACLE_HPP_
#define CHORDWEAVE_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "chordweave/diagram.hpp"
#include "chordweave/tree.hpp"

namespace chordweave {

  //! Parameter limits for exhaustive enumeration. Counts grow like
  //! (2n-1)!! * C(2n+k-1, k-1), so the defaults stop at n = 6, k = 4.
  struct GuardRails {
    int  max_chords     = 6;
    int  max_components = 4;
    bool override_limits = false;

    //! Defaults, with the override taken from CHORDWEAVE_GUARD_OVERRIDE=1.
    [[nodiscard]] static GuardRails from_environment();

    //! Throws GuardRailError when (chords, components) is out of bounds.
    void check(int chords, int components) const;
  };

  //! Calls `visit` on every diagram with n chords on k components, once per
  //! class under chord renaming. Chords are named a, b, c, ... in order of
  //! first appearance. With shards > 1 only the matching words (by index
  //! modulo shards) are visited.
  void for_each_diagram(int                                      n,
                        int                                      k,
                        std::function<void(ChordDiagram const&)> visit,
                        unsigned                                 shard  = 0,
                        unsigned                                 shards = 1);

  [[nodiscard]] std::vector<ChordDiagram> enumerate_diagrams(int n, int k);

  struct CensusTable {
    int  chords         = 0;
    int  components     = 0;
    bool connected_only = false;

    std::uint64_t diagrams       = 0;  // visited, after the connectivity filter
    std::uint64_t connected      = 0;  // with a connected connection graph
    std::uint64_t tree_producing = 0;  // whose intersection graph is a tree

    std::set<std::string> entries;  // canonical_tree encodings

    [[nodiscard]] bool contains(std::string const& encoding) const {
      return entries.contains(encoding);
    }
  };

  //! Enumerates and collects every tree intersection graph. Checks `rails`.
  [[nodiscard]] CensusTable census(int              n,
                                   int              k,
                                   bool             connected_only,
                                   unsigned         jobs  = 1,
                                   GuardRails const& rails = GuardRails::from_environment());

  //! One JSON header line, then the sorted encodings, one per line.
  void                      write_census(std::ostream& out, CensusTable const& table);
  [[nodiscard]] CensusTable read_census(std::istream& in);

  //! Census cache and tree lookup. Thread-safe.
  class Oracle {
   public:
    explicit Oracle(GuardRails rails = GuardRails::from_environment(), unsigned jobs = 1);

    [[nodiscard]] CensusTable const& table(int n, int k, bool connected_only);

    //! True iff t (up to the color permutations allowed for its color
    //! count) is the intersection graph of some diagram: any 2-component
    //! diagram for at most two colors, a connected c-component diagram for
    //! c >= 3 colors.
    [[nodiscard]] bool recognize(DLTree const& t);

    [[nodiscard]] GuardRails const& rails() const noexcept {
      return _rails;
    }
    [[nodiscard]] unsigned jobs() const noexcept {
      return _jobs;
    }

   private:
    GuardRails                                                     _rails;
    unsigned                                                       _jobs;
    std::mutex                                                     _mutex;
    std::map<std::tuple<int, int, bool>, std::unique_ptr<CensusTable>> _tables;
  };

  //! Oracle::recognize on a process-wide oracle using environment rails.
  [[nodiscard]] bool oracle_recognize(DLTree const& t);

  //! Every tree on 1..max_vertices vertices, labels over colors 1..colors and
  //! every edge state, one per canonical form. For colors <= 2 the trees use
  //! at most that many colors; for colors >= 3 they use exactly that many.
  [[nodiscard]] std::vector<DLTree> all_trees(int max_vertices, int colors);

  struct Mismatch {
    std::string tree;  // text form
    bool        recognized = false;
    bool        oracle     = false;
    std::string reason;
  };

  struct CrossReport {
    std::size_t              trees    = 0;
    std::size_t              accepted = 0;
    std::vector<Mismatch>    mismatches;
    std::vector<std::string> roundtrip_failures;  // text form plus the error

    [[nodiscard]] bool passed() const noexcept {
      return mismatches.empty() && roundtrip_failures.empty();
    }
  };

  //! Compares recognize with the oracle on all_trees(max_vertices, colors)
  //! and roundtrips every accepted tree through realize and gamma.
  [[nodiscard]] CrossReport cross_validate(int max_vertices, int colors, Oracle& oracle);

  //! Same check on a caller-supplied family.
  [[nodiscard]] CrossReport cross_validate(std::vector<DLTree> const& trees, Oracle& oracle);

  [[nodiscard]] nlohmann::json to_json(CensusTable const& table, bool with_entries);
  [[nodiscard]] nlohmann::json to_json(CrossReport const& report);

}  // namespace chordweave

#endif  // CHORDWEAVE_ORACLE_HPP_
