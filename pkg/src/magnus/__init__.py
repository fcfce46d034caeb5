"""Magnus and Alexander functors on Lagrangian cobordisms, computed exactly."""
