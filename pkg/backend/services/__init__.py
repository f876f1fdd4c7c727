# Pure computation: graph, peeling, relaxation, rounding, assembly, oracle, I/O
