// heights: implementation pending
