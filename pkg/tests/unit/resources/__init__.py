# Unit tests for HTTP resources
