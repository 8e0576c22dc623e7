/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ARCCONN_GUARD_ARCCONN_ARC_BITS_HH
#define ARCCONN_GUARD_ARCCONN_ARC_BITS_HH 1

#include <arcconn/digraph.hh>

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace arcconn
{
    /**
     * A fixed-width bitset over the arc indices of one digraph. Used as the
     * working representation of arc subsets inside the searches; ArcSet is
     * the value type that crosses module boundaries.
     */
    class ArcBits
    {
        private:
            std::vector<std::uint64_t> _words;

        public:
            ArcBits() = default;
            explicit ArcBits(int bits) : _words((bits + 63) / 64, 0) { }

            auto set(int i) -> void { _words[i / 64] |= std::uint64_t{ 1 } << (i % 64); }
            auto reset(int i) -> void { _words[i / 64] &= ~(std::uint64_t{ 1 } << (i % 64)); }
            auto test(int i) const -> bool { return (_words[i / 64] >> (i % 64)) & 1; }

            auto count() const -> int
            {
                int result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto none() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            auto intersects(const ArcBits & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & other._words[i])
                        return true;
                return false;
            }

            /// True iff every bit of this is also set in other.
            auto is_subset_of(const ArcBits & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & ~other._words[i])
                        return false;
                return true;
            }

            auto operator|= (const ArcBits & other) -> ArcBits &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= other._words[i];
                return *this;
            }

            auto operator| (const ArcBits & other) const -> ArcBits
            {
                ArcBits result = *this;
                result |= other;
                return result;
            }

            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    for (auto w = _words[i] ; w ; w &= w - 1)
                        f(int(i * 64 + std::countr_zero(w)));
            }

            auto words() const -> const std::vector<std::uint64_t> & { return _words; }

            auto operator== (const ArcBits &) const -> bool = default;
    };

    inline auto to_arc_set(const Digraph & d, const ArcBits & bits) -> ArcSet
    {
        std::vector<Arc> arcs;
        bits.for_each([&] (int i) { arcs.push_back(d.arc(i)); });
        return ArcSet{ std::move(arcs) };
    }

    /// Arcs not present in d throw InvalidInput.
    inline auto to_arc_bits(const Digraph & d, const ArcSet & arcs) -> ArcBits
    {
        ArcBits result(d.size());
        for (auto & a : arcs) {
            auto index = d.arc_index(a);
            if (! index)
                throw InvalidInput{ "arc (" + std::to_string(a.from) + "," + std::to_string(a.to) + ") is not in the digraph" };
            result.set(*index);
        }
        return result;
    }

    struct ArcBitsHash
    {
        auto operator() (const ArcBits & b) const -> std::size_t
        {
            std::size_t h = 0x9e3779b97f4a7c15ULL;
            for (auto w : b.words())
                h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
            return h;
        }
    };
}

#endif
