#!/usr/bin/env python3
"""Walk through the iterated construction for a single generic class.

A program with one generic class already induces infinitely many ground
types, because instantiations nest without bound.  The construction
approaches that infinite order through finite approximations: each step
multiplies the subclassing graph with the containment graph of the wildcard
arguments over the previous step.
"""

from groundsub import parse_declarations, run, wildcards_graph

table = parse_declarations("class C<T> {}")
print("classes:", ", ".join(table.classes), "   generic:", ", ".join(sorted(table.generic)))
print()

trace = run(table, 3)
for i, s in enumerate(trace.graphs, start=1):
    n, m = len(s.graph.vertices), len(s.graph.edges)
    print(f"step {i}: {n} vertices, {m} edges")
print()

# The first approximation is just the subclassing chain with the generic
# class instantiated at the default wildcard.
first = trace.graphs[0]
print("first approximation:")
for e in first.graph.sorted_edges:
    print(f"   {e.src} -> {e.dst}")
print()

# Its argument graph has three copies of every inner vertex: upper-bounded,
# lower-bounded, and plain.  The corners collapse, so 3 vertices become 6.
arguments = wildcards_graph(first)
print(f"arguments over step 1 ({len(arguments.vertices)} vertices):")
for e in arguments.sorted_edges:
    print(f"   {e.src}  ->  {e.dst}   [{e.tag.value}]")
print()

# Multiplying wraps each argument in C<...> and reattaches O and N.
second = trace.graphs[1]
print("second approximation:")
for e in second.graph.sorted_edges:
    print(f"   {e.src}  ->  {e.dst}   [{e.tag.value}]")
