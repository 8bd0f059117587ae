#include "morin/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "morin/errors.hpp"

namespace morin {

namespace {

std::vector<int> normalize(std::vector<int> parts)
{
    for (int p : parts)
        if (p < 0)
            throw ShapeError("partition parts must be nonnegative");
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end());
    return parts;
}

void rectangle_rec(int rows, int cap, std::vector<int>& stack, std::vector<std::vector<int>>& out)
{
    // stack holds parts from the largest down; fill remaining rows with values <= cap
    if (static_cast<int>(stack.size()) == rows) {
        out.push_back(stack);
        return;
    }
    for (int v = 0; v <= cap; ++v) {
        stack.push_back(v);
        rectangle_rec(rows, v, stack, out);
        stack.pop_back();
    }
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(normalize(std::vector<int>(parts))) {}

Partition::Partition(std::vector<int> parts) : parts_(normalize(std::move(parts))) {}

int Partition::weight() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::from_top(std::size_t k) const noexcept
{
    return k < parts_.size() ? parts_[parts_.size() - 1 - k] : 0;
}

std::vector<int> Partition::padded(std::size_t len) const
{
    std::vector<int> out(len > parts_.size() ? len - parts_.size() : 0, 0);
    out.insert(out.end(), parts_.begin(), parts_.end());
    return out;
}

std::string Partition::to_string() const
{
    const bool digits = std::all_of(parts_.begin(), parts_.end(), [](int p) { return p <= 9; });
    std::string s;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (!digits && k > 0)
            s += ',';
        s += std::to_string(parts_[k]);
    }
    return digits ? s : '(' + s + ')';
}

Partition Partition::parse(const std::string& text)
{
    std::vector<int> parts;
    const bool wrapped = text.size() >= 2 && text.front() == '(' && text.back() == ')';
    if (wrapped || text.find(',') != std::string::npos) {
        const std::size_t offset = wrapped ? 1 : 0;
        const std::string body = wrapped ? text.substr(1, text.size() - 2) : text;
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t next = body.find(',', pos);
            if (next == std::string::npos)
                next = body.size();
            std::string field = body.substr(pos, next - pos);
            if (field.empty() || field.size() > 9 ||
                !std::all_of(field.begin(), field.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }))
                throw ParseError(pos + offset, "integer part", text);
            parts.push_back(std::stoi(field));
            pos = next + 1;
        }
    } else {
        for (std::size_t k = 0; k < text.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(text[k])))
                throw ParseError(k, "digit", text);
            parts.push_back(text[k] - '0');
        }
    }
    if (!std::is_sorted(parts.begin(), parts.end()))
        throw ParseError(0, "weakly increasing parts", text);
    return Partition(std::move(parts));
}

Partition rectangle(int rows, int cols)
{
    if (rows <= 0 || cols <= 0)
        return {};
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

Partition conjugate(const Partition& p)
{
    std::vector<int> cols;
    for (int c = 1; c <= p.largest(); ++c) {
        int n = static_cast<int>(std::count_if(p.parts().begin(), p.parts().end(), [c](int q) { return q >= c; }));
        cols.push_back(n);
    }
    return Partition(std::move(cols));
}

bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.length() > outer.length())
        return false;
    for (std::size_t k = 0; k < inner.length(); ++k)
        if (inner.from_top(k) > outer.from_top(k))
            return false;
    return true;
}

bool in_hook(const Partition& p, int m, int n)
{
    const auto s = static_cast<int>(p.length());
    if (s <= m)
        return true;
    // i_{s-m} in 1-based French indexing
    return p.parts()[static_cast<std::size_t>(s - m - 1)] <= n;
}

std::vector<Partition> partitions_in_rectangle(int rows, int cols)
{
    if (rows < 0 || cols < 0)
        return {};
    std::vector<std::vector<int>> raw;
    std::vector<int> stack;
    rectangle_rec(rows, cols, stack, raw);
    for (auto& v : raw)
        std::reverse(v.begin(), v.end()); // padded, weakly increasing
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
        int wa = std::accumulate(a.begin(), a.end(), 0);
        int wb = std::accumulate(b.begin(), b.end(), 0);
        if (wa != wb)
            return wa < wb;
        return a < b;
    });
    std::vector<Partition> out;
    out.reserve(raw.size());
    for (auto& v : raw)
        out.emplace_back(std::move(v));
    return out;
}

std::vector<Partition> partitions_of(int weight)
{
    if (weight < 0)
        return {};
    std::vector<std::vector<int>> raw;
    std::vector<int> stack; // parts from the largest down
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            raw.emplace_back(stack.rbegin(), stack.rend());
            return;
        }
        for (int v = std::min(cap, remaining); v >= 1; --v) {
            stack.push_back(v);
            self(self, remaining - v, v);
            stack.pop_back();
        }
    };
    rec(rec, weight, weight);
    // lexicographic on parts padded to a common length == weight order convention
    std::sort(raw.begin(), raw.end(), [weight](const auto& a, const auto& b) {
        std::vector<int> pa(static_cast<std::size_t>(weight) - a.size(), 0), pb(static_cast<std::size_t>(weight) - b.size(), 0);
        pa.insert(pa.end(), a.begin(), a.end());
        pb.insert(pb.end(), b.begin(), b.end());
        return pa < pb;
    });
    std::vector<Partition> out;
    out.reserve(raw.size());
    for (auto& v : raw)
        out.emplace_back(std::move(v));
    return out;
}

std::optional<int> classify_h(const Partition& p, int r)
{
    if (!contains(p, rectangle(1, r)))
        return std::nullopt;
    int h = 1;
    while (contains(p, rectangle(h + 1, r + h)))
        ++h;
    return h;
}

bool DisplayOrder::operator()(const Partition& a, const Partition& b) const
{
    if (a.weight() != b.weight())
        return a.weight() < b.weight();
    if (a.length() != b.length())
        return a.length() > b.length();
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(), a.parts().end());
}

} // namespace morin
