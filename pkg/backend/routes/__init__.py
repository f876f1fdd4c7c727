# Partition API routes
