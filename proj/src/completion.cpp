#include "ncgb/completion.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "ncgb/error.hpp"

namespace ncgb {

Poly overlap_element(const Poly& f, const Poly& g, const OverlapShape& shape)
{
    check_same_ring(f.ring(), g.ring());
    const Word& a = f.lm();
    const Word& b = g.lm();
    if (a * shape.u != shape.v * b)
        throw Error("invalid overlap shape: LM(f)*u != v*LM(g)");
    if (divides(a, shape.v) || divides(b, shape.u))
        throw Error("invalid overlap shape: inclusion instead of an overlap");
    Poly fu = f.lc().inverse() * sandwich(Word{}, f, shape.u);
    Poly vg = g.lc().inverse() * sandwich(shape.v, g, Word{});
    return fu - vg;
}

std::vector<ObstructionTask> new_obstructions(std::span<const Poly> basis, std::size_t fresh)
{
    std::vector<ObstructionTask> out;
    const Poly& r = basis[fresh];
    const Ring& ring = r.ring();
    auto add = [&](std::size_t l, std::size_t q) {
        const Word& lm = basis[l].lm();
        // a constant leading word has no proper overlaps
        if (lm.empty() || basis[q].lm().empty())
            return;
        int dl = ring.degree(lm);
        for (auto& shape : proper_overlaps(lm, basis[q].lm())) {
            int d = dl + ring.degree(shape.u);
            out.push_back({l, q, std::move(shape), d});
        }
    };
    for (std::size_t i = 0; i < fresh; ++i) {
        add(i, fresh);
        add(fresh, i);
    }
    add(fresh, fresh);
    return out;
}

void require_homogeneous(std::span<const Poly> polys, const char* what)
{
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].is_zero())
            throw Error(std::string(what) + ": element " + std::to_string(i) + " is zero");
        if (!polys[i].homogeneous_degree())
            throw Error(std::string(what) + ": element " + std::to_string(i) + " is not homogeneous");
    }
    check_same_ring(polys);
}

GroebnerCheck is_groebner_up_to(std::span<const Poly> basis, int n)
{
    require_homogeneous(basis, "is_groebner_up_to");
    if (!is_lm_reduced(basis))
        throw Error("is_groebner_up_to: input is not LM-reduced");
    std::vector<Poly> low;
    for (const auto& g : basis)
        if (g.degree() <= n)
            low.push_back(g);
    GroebnerCheck check;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (const auto& task : new_obstructions(basis, j)) {
            if (task.degree > n)
                continue;
            Poly r = remainder(overlap_element(basis[task.left_index], basis[task.right_index], task.shape), low);
            if (!r.is_zero()) {
                check.ok = false;
                check.witness = std::move(r);
                check.obstruction = task;
                return check;
            }
        }
    }
    return check;
}

namespace {

// Obstruction queue: lowest degree first, creation order within a degree.
using ObstructionQueue = std::multimap<int, ObstructionTask>;

std::vector<Poly> sorted_by_degree(std::vector<Poly> polys)
{
    std::stable_sort(polys.begin(), polys.end(),
                     [](const Poly& a, const Poly& b) { return a.ring().degree(a.lm()) < b.ring().degree(b.lm()); });
    return polys;
}

} // namespace

CompletionResult buchberger(std::span<const Poly> generators, const CompletionGuard& guard)
{
    if (!guard.max_degree && !guard.max_elements)
        throw Error("completion requires a max-degree or max-elements guard");
    for (const auto& g : generators)
        if (g.is_zero())
            throw Error("completion: zero generator");

    std::vector<Poly> slots;
    std::vector<bool> alive;
    std::size_t alive_count = 0;
    ObstructionQueue queue;

    auto alive_basis = [&] {
        std::vector<Poly> out;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (alive[i])
                out.push_back(slots[i]);
        return out;
    };

    // Inserts the reduction of p, retiring elements whose leading word it
    // divides so the basis stays LM-reduced; retired elements are reduced
    // and re-inserted through `backlog`. Retiring never changes
    // alive_count + backlog.size(), so the element guard is only consulted
    // for a genuinely new element. Returns false when the guard refuses it.
    std::deque<Poly> backlog;
    auto insert = [&](const Poly& p, bool guarded) {
        Poly first = remainder(p, alive_basis());
        if (first.is_zero())
            return true;
        if (guarded && guard.max_elements && alive_count + 1 > *guard.max_elements)
            return false;
        backlog.push_back(std::move(first));
        while (!backlog.empty()) {
            Poly q = remainder(backlog.front(), alive_basis());
            backlog.pop_front();
            if (q.is_zero())
                continue;
            q = q.monic();
            std::size_t idx = slots.size();
            for (std::size_t i = 0; i < idx; ++i) {
                if (alive[i] && divides(q.lm(), slots[i].lm())) {
                    alive[i] = false;
                    --alive_count;
                    backlog.push_back(slots[i]);
                }
            }
            slots.push_back(std::move(q));
            alive.push_back(true);
            ++alive_count;
            for (auto& task : new_obstructions(slots, idx))
                if (alive[task.left_index] && alive[task.right_index])
                    queue.emplace(task.degree, std::move(task));
        }
        return true;
    };

    CompletionResult result;
    auto stop = [&](std::size_t pending) {
        result.basis = sorted_by_degree(alive_basis());
        result.status = CompletionStatus::GuardHit;
        result.pending = pending;
        return result;
    };

    // The interreduced input is always kept, even past max_elements.
    for (const auto& g : interreduce(generators))
        insert(g, false);

    while (!queue.empty()) {
        auto top = queue.begin();
        if (guard.max_degree && top->first > *guard.max_degree)
            return stop(queue.size());
        ObstructionTask task = std::move(top->second);
        queue.erase(top);
        if (!alive[task.left_index] || !alive[task.right_index])
            continue;
        Poly o = overlap_element(slots[task.left_index], slots[task.right_index], task.shape);
        Poly r = remainder(o, alive_basis());
        if (!r.is_zero() && !insert(r, true))
            return stop(queue.size() + 1);
    }
    result.basis = sorted_by_degree(alive_basis());
    return result;
}

std::vector<Poly> TruncatedBasis::up_to(int n) const
{
    std::vector<Poly> out;
    for (const auto& g : elements)
        if (g.degree() <= n)
            out.push_back(g);
    return out;
}

GradedRun graded_completion(std::span<const Poly> generators, int n0)
{
    require_homogeneous(generators, "graded completion");
    GradedRun run;
    run.basis.truncation_degree = n0;
    if (generators.empty())
        return run;

    std::vector<std::size_t> order(generators.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return generators[a].degree() < generators[b].degree();
    });
    if (n0 < generators[order.front()].degree())
        throw Error("truncation degree " + std::to_string(n0) + " is below the smallest generator degree " +
                    std::to_string(generators[order.front()].degree()));

    std::deque<std::size_t> pending;
    for (auto i : order)
        if (generators[i].degree() <= n0)
            pending.push_back(i);

    std::vector<Poly>& basis = run.basis.elements;
    ObstructionQueue queue;
    int n = 0;
    auto append = [&](Poly r) {
        basis.push_back(r.monic());
        for (auto& task : new_obstructions(basis, basis.size() - 1)) {
            if (task.degree > n0)
                continue;
            if (task.degree <= n)
                throw InvariantError("new obstruction of degree " + std::to_string(task.degree) +
                                     " while working in degree " + std::to_string(n));
            queue.emplace(task.degree, std::move(task));
        }
    };

    while (!pending.empty() || !queue.empty()) {
        n = std::numeric_limits<int>::max();
        if (!pending.empty())
            n = generators[pending.front()].degree();
        if (!queue.empty())
            n = std::min(n, queue.begin()->first);

        std::vector<ObstructionTask> current;
        for (auto it = queue.begin(); it != queue.end() && it->first == n;)
            current.push_back(std::move(it->second)), it = queue.erase(it);
        std::vector<std::size_t> batch;
        while (!pending.empty() && generators[pending.front()].degree() == n)
            batch.push_back(pending.front()), pending.pop_front();

        for (const auto& task : current) {
            Poly o = overlap_element(basis[task.left_index], basis[task.right_index], task.shape);
            Poly r = remainder(o, basis);
            if (!r.is_zero())
                append(std::move(r));
        }
        for (auto j : batch) {
            Poly r = remainder(generators[j], basis);
            if (!r.is_zero()) {
                run.kept.push_back(j);
                append(std::move(r));
            }
        }
    }
    return run;
}

TruncatedBasis truncated_gb(std::span<const Poly> generators, int n0)
{
    return graded_completion(generators, n0).basis;
}

} // namespace ncgb
