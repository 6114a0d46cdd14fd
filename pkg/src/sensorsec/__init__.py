"""Security architecture for mobile wireless sensor networks."""
