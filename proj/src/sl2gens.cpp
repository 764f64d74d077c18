#include "weitz/sl2gens.hpp"

#include <stdexcept>

namespace weitz {

namespace {

void enumerate_tuples(const std::vector<Sl2Generator>& gens, int remaining,
                      std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (const auto& g : gens) {
        if (g.degree > remaining) break;  // construction order is by degree
        cur.push_back(g.id);
        enumerate_tuples(gens, remaining - g.degree, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> sl2_product_tuples(const std::vector<Sl2Generator>& gens,
                                                 int degree) {
    if (degree < 0 || degree % 2 != 0) return {};
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate_tuples(gens, degree, cur, out);
    return out;
}

std::vector<NCPoly> sl2_products(const std::vector<Sl2Generator>& gens, int degree) {
    std::vector<NCPoly> out;
    for (const auto& tuple : sl2_product_tuples(gens, degree)) {
        NCPoly p = NCPoly::unit(2);
        for (int id : tuple) p = p * gens[static_cast<std::size_t>(id - 1)].poly;
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Sl2Generator> sl2_generators(int maxdeg) {
    if (maxdeg < 0) throw std::invalid_argument("negative degree bound");
    std::vector<Sl2Generator> gens;
    const NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    for (int deg = 2; deg <= maxdeg; deg += 2) {
        auto tuples = sl2_product_tuples(gens, deg - 2);
        std::size_t before = gens.size();
        for (std::size_t j = 0; j < tuples.size(); ++j) {
            NCPoly omega = NCPoly::unit(2);
            for (int id : tuples[j]) omega = omega * gens[static_cast<std::size_t>(id - 1)].poly;
            Sl2Generator g;
            g.id = static_cast<int>(before + j) + 1;
            g.degree = deg;
            g.factors = tuples[j];
            g.poly = x * omega * y - y * omega * x;
            gens.push_back(std::move(g));
        }
    }
    return gens;
}

std::map<int, long> sl2_generator_counts(const std::vector<Sl2Generator>& gens) {
    std::map<int, long> counts;
    for (const auto& g : gens) ++counts[g.degree];
    return counts;
}

Word minimal_monomial(const NCPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero element has no monomials");
    return f.terms().begin()->first;
}

bool is_dyck(const Word& w) {
    int balance = 0;
    for (int letter : w) {
        balance += letter == 0 ? 1 : -1;
        if (balance < 0) return false;
    }
    return balance == 0;
}

namespace {

void enumerate_dyck(int open_left, int balance, Word& cur, std::vector<Word>& out) {
    if (open_left == 0 && balance == 0) {
        out.push_back(cur);
        return;
    }
    if (open_left > 0) {
        cur.push_back(0);
        enumerate_dyck(open_left - 1, balance + 1, cur, out);
        cur.pop_back();
    }
    if (balance > 0) {
        cur.push_back(1);
        enumerate_dyck(open_left, balance - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Word> dyck_words(int half) {
    if (half < 0) throw std::invalid_argument("negative length");
    std::vector<Word> out;
    Word cur;
    enumerate_dyck(half, 0, cur, out);
    return out;
}

}  // namespace weitz
