// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hecke/error.hpp"

namespace hecke {

/// A Young diagram: non-increasing positive row lengths.  The empty
/// partition (n = 0) is a valid value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw InvalidPartition("parts must be positive in " + to_string());
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw InvalidPartition("parts must be non-increasing in " + to_string());
        }
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts arbitrary positive parts into a partition (cycle types, compositions).
    static Partition from_unsorted(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    int size() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    /// Length of row k (0-based); 0 beyond the last row.
    int row(int k) const { return k < rows() ? parts_[static_cast<std::size_t>(k)] : 0; }
    bool empty() const { return parts_.empty(); }

    /// Conjugate (transposed) diagram.
    Partition conjugate() const {
        std::vector<int> out;
        for (int c = 0; c < row(0); ++c) {
            int len = 0;
            while (len < rows() && parts_[static_cast<std::size_t>(len)] > c) ++len;
            out.push_back(len);
        }
        return Partition(std::move(out));
    }

    /// Drops parts equal to 1 (cycle-type view of a class).
    Partition without_ones() const {
        std::vector<int> out;
        for (int p : parts_)
            if (p > 1) out.push_back(p);
        return Partition(std::move(out));
    }

    /// Pads with parts equal to 1 up to n boxes.
    Partition padded_to(int n) const {
        if (n < n_) throw SizeMismatch("cannot pad " + to_string() + " to " + std::to_string(n));
        std::vector<int> out = parts_;
        out.insert(out.end(), static_cast<std::size_t>(n - n_), 1);
        return Partition(std::move(out));
    }

    /// Removable corners: the rows whose last box can be removed.
    std::vector<int> removable_rows() const {
        std::vector<int> out;
        for (int i = 0; i < rows(); ++i)
            if (i + 1 == rows() || parts_[static_cast<std::size_t>(i + 1)] < parts_[static_cast<std::size_t>(i)])
                out.push_back(i);
        return out;
    }
    /// Addable cells: rows (possibly a new one) that can receive a box.
    std::vector<int> addable_rows() const {
        std::vector<int> out;
        for (int i = 0; i <= rows(); ++i)
            if (i == 0 || row(i) < row(i - 1)) out.push_back(i);
        return out;
    }

    Partition remove_box(int row_index) const {
        std::vector<int> out = parts_;
        auto& r = out.at(static_cast<std::size_t>(row_index));
        --r;
        if (r == 0) out.pop_back();
        return Partition(std::move(out));
    }
    Partition add_box(int row_index) const {
        std::vector<int> out = parts_;
        if (row_index == rows())
            out.push_back(1);
        else
            ++out.at(static_cast<std::size_t>(row_index));
        return Partition(std::move(out));
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    /// Parses the bracketed text form, e.g. "[4,1,1]" (whitespace ignored).
    static Partition parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.size() < 2 || s.front() != '[' || s.back() != ']')
            throw InvalidPartition("expected bracketed part list, got '" + std::string(text) + "'");
        std::vector<int> parts;
        std::string body = s.substr(1, s.size() - 2);
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty() || tok.size() > 6 ||
                !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw InvalidPartition("bad part '" + tok + "' in '" + std::string(text) + "'");
            parts.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
            if (pos == body.size()) throw InvalidPartition("trailing comma in '" + std::string(text) + "'");
        }
        return Partition(std::move(parts));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

/// All partitions of n in reverse-lexicographic order: [n], [n-1,1], [n-2,2], ...
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

} // namespace hecke

template <>
struct std::hash<hecke::Partition> {
    std::size_t operator()(const hecke::Partition& p) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
        return h;
    }
};
