"""Average-degree partition solver."""
