#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "ms2c/treewidth.hpp"

namespace ms2c {

namespace {

int max_bag_width(const std::vector<std::vector<Vertex>>& bags) {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

}  // namespace

int TreeDecomposition::width() const { return max_bag_width(bags); }

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
    return w;
}

TreeDecomposition NiceTreeDecomposition::as_tree_decomposition() const {
    TreeDecomposition td;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        td.bags.push_back(nodes[i].bag);
        for (int c : nodes[i].children) td.tree_edges.emplace_back(static_cast<int>(i), c);
    }
    return td;
}

TdCheck validate_tree_decomposition(const StaticGraph& g, const TreeDecomposition& td) {
    const int n = g.vertex_count();
    const int b = static_cast<int>(td.bags.size());
    auto fail = [](std::string m) { return TdCheck{false, std::move(m)}; };
    if (b == 0) return n == 0 ? TdCheck{} : fail("no bags");
    if (static_cast<int>(td.tree_edges.size()) != b - 1) return fail("decomposition tree needs bags-1 edges");

    std::vector<int> parent(static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [x, y] : td.tree_edges) {
        if (x < 0 || y < 0 || x >= b || y >= b) return fail("tree edge refers to a missing bag");
        const int rx = find(x), ry = find(y);
        if (rx == ry) return fail("decomposition tree has a cycle");
        parent[rx] = ry;
    }

    std::vector<std::vector<bool>> in(static_cast<std::size_t>(b));
    std::vector<int> bags_with(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < b; ++i) {
        in[i].assign(static_cast<std::size_t>(n) + 1, false);
        for (Vertex v : td.bags[i]) {
            if (v < 1 || v > n) return fail("bag " + std::to_string(i) + " has vertex " + std::to_string(v));
            if (in[i][v]) return fail("bag " + std::to_string(i) + " repeats vertex " + std::to_string(v));
            in[i][v] = true;
            ++bags_with[v];
        }
    }
    for (Vertex v = 1; v <= n; ++v)
        if (bags_with[v] == 0) return fail("vertex " + std::to_string(v) + " is in no bag");
    for (const auto& e : g.edges()) {
        bool covered = false;
        for (int i = 0; i < b && !covered; ++i) covered = in[i][e.u] && in[i][e.v];
        if (!covered) return fail("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is in no bag");
    }
    // the bags holding v induce a forest; it is a tree iff it has one edge fewer than nodes
    std::vector<int> tree_edges_with(static_cast<std::size_t>(n) + 1, 0);
    for (auto [x, y] : td.tree_edges)
        for (Vertex v : td.bags[x])
            if (in[y][v]) ++tree_edges_with[v];
    for (Vertex v = 1; v <= n; ++v)
        if (tree_edges_with[v] != bags_with[v] - 1)
            return fail("bags containing vertex " + std::to_string(v) + " are not connected");
    return {};
}

TdCheck validate_nice_tree_decomposition(const StaticGraph& g, const NiceTreeDecomposition& td) {
    auto fail = [](std::string m) { return TdCheck{false, std::move(m)}; };
    if (td.root < 0 || td.root >= static_cast<int>(td.nodes.size())) return fail("missing root");
    if (!td.nodes[td.root].bag.empty()) return fail("root bag is not empty");
    for (std::size_t i = 0; i < td.nodes.size(); ++i) {
        const auto& nd = td.nodes[i];
        const std::string where = "node " + std::to_string(i) + ": ";
        if (!std::is_sorted(nd.bag.begin(), nd.bag.end())) return fail(where + "bag not sorted");
        for (int c : nd.children)
            if (c < 0 || c >= static_cast<int>(i)) return fail(where + "child does not precede parent");
        auto child_bag = [&](int k) -> const std::vector<Vertex>& { return td.nodes[nd.children[k]].bag; };
        switch (nd.kind) {
            case NiceKind::Leaf:
                if (!nd.children.empty()) return fail(where + "leaf with children");
                if (g.vertex_count() > 0 && (nd.bag.size() != 1 || nd.bag[0] != nd.vertex))
                    return fail(where + "leaf bag must be exactly its vertex");
                break;
            case NiceKind::Introduce: {
                if (nd.children.size() != 1) return fail(where + "introduce needs one child");
                auto expect = child_bag(0);
                if (std::binary_search(expect.begin(), expect.end(), nd.vertex))
                    return fail(where + "introduced vertex already in child");
                expect.insert(std::lower_bound(expect.begin(), expect.end(), nd.vertex), nd.vertex);
                if (expect != nd.bag) return fail(where + "introduce bag mismatch");
                break;
            }
            case NiceKind::Forget: {
                if (nd.children.size() != 1) return fail(where + "forget needs one child");
                auto expect = child_bag(0);
                auto it = std::lower_bound(expect.begin(), expect.end(), nd.vertex);
                if (it == expect.end() || *it != nd.vertex) return fail(where + "forgotten vertex not in child");
                expect.erase(it);
                if (expect != nd.bag) return fail(where + "forget bag mismatch");
                break;
            }
            case NiceKind::Join:
                if (nd.children.size() != 2) return fail(where + "join needs two children");
                if (child_bag(0) != nd.bag || child_bag(1) != nd.bag) return fail(where + "join bags differ");
                break;
        }
    }
    return validate_tree_decomposition(g, td.as_tree_decomposition());
}

std::vector<Vertex> min_fill_ordering(const StaticGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n) + 1);
    for (const auto& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<bool> gone(static_cast<std::size_t>(n) + 1, false);
    std::vector<Vertex> order;
    for (int step = 0; step < n; ++step) {
        Vertex best = 0;
        std::size_t best_fill = 0, best_deg = 0;
        for (Vertex v = 1; v <= n; ++v) {
            if (gone[v]) continue;
            std::size_t fill = 0;
            for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
                for (auto b = std::next(a); b != adj[v].end(); ++b)
                    if (!adj[*a].count(*b)) ++fill;
            if (best == 0 || fill < best_fill || (fill == best_fill && adj[v].size() < best_deg)) {
                best = v;
                best_fill = fill;
                best_deg = adj[v].size();
            }
        }
        for (auto a = adj[best].begin(); a != adj[best].end(); ++a)
            for (auto b = std::next(a); b != adj[best].end(); ++b) {
                adj[*a].insert(*b);
                adj[*b].insert(*a);
            }
        for (Vertex u : adj[best]) adj[u].erase(best);
        adj[best].clear();
        gone[best] = true;
        order.push_back(best);
    }
    return order;
}

TreeDecomposition decomposition_from_ordering(const StaticGraph& g, const std::vector<Vertex>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) throw PreconditionError("elimination order must list every vertex");
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 1 || order[i] > n || pos[order[i]] >= 0)
            throw PreconditionError("elimination order is not a permutation");
        pos[order[i]] = i;
    }
    std::vector<std::set<Vertex>> later(static_cast<std::size_t>(n) + 1);
    for (const auto& e : g.edges()) {
        if (pos[e.u] < pos[e.v]) later[e.u].insert(e.v);
        else later[e.v].insert(e.u);
    }
    TreeDecomposition td;
    td.bags.resize(static_cast<std::size_t>(n));
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        const Vertex v = order[i];
        auto& bag = td.bags[i];
        bag.push_back(v);
        bag.insert(bag.end(), later[v].begin(), later[v].end());
        std::sort(bag.begin(), bag.end());
        if (later[v].empty()) {
            roots.push_back(i);
            continue;
        }
        Vertex next = *std::min_element(later[v].begin(), later[v].end(),
                                        [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
        for (Vertex u : later[v])
            if (u != next) later[next].insert(u);
        td.tree_edges.emplace_back(i, pos[next]);
    }
    for (std::size_t r = 1; r < roots.size(); ++r) td.tree_edges.emplace_back(roots[r - 1], roots[r]);
    return td;
}

NiceTreeDecomposition make_nice(const TreeDecomposition& td, int n) {
    NiceTreeDecomposition nice;
    auto add = [&](NiceKind kind, std::vector<Vertex> bag, Vertex v, std::vector<int> children) {
        nice.nodes.push_back({kind, std::move(bag), v, std::move(children)});
        return static_cast<int>(nice.nodes.size()) - 1;
    };
    auto sorted = [](std::vector<Vertex> b) {
        std::sort(b.begin(), b.end());
        return b;
    };
    // forget from \ to, then introduce to \ from
    auto chain = [&](int id, const std::vector<Vertex>& to) {
        std::vector<Vertex> cur = nice.nodes[id].bag;
        for (Vertex v : std::vector<Vertex>(cur)) {
            if (std::binary_search(to.begin(), to.end(), v)) continue;
            cur.erase(std::find(cur.begin(), cur.end(), v));
            id = add(NiceKind::Forget, cur, v, {id});
        }
        for (Vertex v : to) {
            if (std::binary_search(cur.begin(), cur.end(), v)) continue;
            cur.insert(std::lower_bound(cur.begin(), cur.end(), v), v);
            id = add(NiceKind::Introduce, cur, v, {id});
        }
        return id;
    };

    const int b = static_cast<int>(td.bags.size());
    if (b == 0) {
        if (n != 0) throw PreconditionError("empty decomposition of a non-empty graph");
        nice.root = add(NiceKind::Leaf, {}, 0, {});
        return nice;
    }
    std::vector<std::vector<int>> tree(static_cast<std::size_t>(b));
    for (auto [x, y] : td.tree_edges) {
        tree[x].push_back(y);
        tree[y].push_back(x);
    }
    std::function<int(int, int)> build = [&](int node, int from) -> int {
        const auto bag = sorted(td.bags[node]);
        std::vector<int> parts;
        for (int c : tree[node]) {
            if (c == from) continue;
            const int id = build(c, node);
            if (id >= 0) parts.push_back(chain(id, bag));
        }
        if (parts.empty()) {
            if (bag.empty()) return -1;
            int id = add(NiceKind::Leaf, {bag[0]}, bag[0], {});
            return chain(id, bag);
        }
        int id = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) id = add(NiceKind::Join, bag, 0, {id, parts[i]});
        return id;
    };
    int top = build(0, -1);
    if (top < 0) {
        if (n != 0) throw PreconditionError("decomposition has only empty bags");
        nice.root = add(NiceKind::Leaf, {}, 0, {});
        return nice;
    }
    nice.root = chain(top, {});
    return nice;
}

NiceTreeDecomposition build_nice_tree_decomposition(const StaticGraph& g) {
    return make_nice(decomposition_from_ordering(g, min_fill_ordering(g)), g.vertex_count());
}

TreeDecomposition parse_pace_td(std::string_view text) {
    TreeDecomposition td;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int declared_bags = -1;
    auto fail = [&](const std::string& m) {
        throw InvalidInstance("line " + std::to_string(line_no) + ": " + m);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head == "c") continue;
        if (head == "s") {
            std::string kind;
            int width1 = 0, n = 0;
            if (!(ls >> kind >> declared_bags >> width1 >> n) || kind != "td" || declared_bags < 0)
                fail("expected 's td <bags> <width+1> <n>'");
            td.bags.assign(static_cast<std::size_t>(declared_bags), {});
        } else if (head == "b") {
            if (declared_bags < 0) fail("bag before header");
            int id = 0;
            if (!(ls >> id) || id < 1 || id > declared_bags) fail("bad bag id");
            Vertex v;
            while (ls >> v) td.bags[id - 1].push_back(v);
            std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
        } else {
            if (declared_bags < 0) fail("edge before header");
            int x = 0, y = 0;
            try {
                x = std::stoi(head);
            } catch (const std::exception&) {
                fail("unexpected token '" + head + "'");
            }
            if (!(ls >> y) || x < 1 || y < 1 || x > declared_bags || y > declared_bags) fail("bad tree edge");
            td.tree_edges.emplace_back(x - 1, y - 1);
        }
    }
    if (declared_bags < 0) throw InvalidInstance("missing 's td' header");
    return td;
}

std::string write_pace_td(const TreeDecomposition& td, int n) {
    std::ostringstream os;
    os << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        os << "b " << i + 1;
        for (Vertex v : td.bags[i]) os << ' ' << v;
        os << '\n';
    }
    for (auto [x, y] : td.tree_edges) os << x + 1 << ' ' << y + 1 << '\n';
    return os.str();
}

}  // namespace ms2c
