#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sgt {

/// Dense vertex index; valid ids are 0..|V|-1 of the owning game.
using VertexId = unsigned int;

/// Set of vertices as a bitset whose capacity equals |V|.
using VertexSet = boost::dynamic_bitset<>;

inline VertexSet make_set(std::size_t capacity, std::initializer_list<VertexId> vs)
{
    VertexSet s(capacity);
    for (VertexId v : vs)
        s.set(v);
    return s;
}

inline VertexSet full_set(std::size_t capacity)
{
    VertexSet s(capacity);
    s.set();
    return s;
}

template <typename F>
void for_each_vertex(const VertexSet& s, F&& f)
{
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
        f(static_cast<VertexId>(v));
}

inline std::vector<VertexId> set_to_vector(const VertexSet& s)
{
    std::vector<VertexId> out;
    out.reserve(s.count());
    for_each_vertex(s, [&](VertexId v) { out.push_back(v); });
    return out;
}

inline std::string format_set(const VertexSet& s)
{
    std::string out = "{";
    bool first = true;
    for_each_vertex(s, [&](VertexId v) {
        if (!first)
            out += ", ";
        out += std::to_string(v);
        first = false;
    });
    out += "}";
    return out;
}

} // namespace sgt
