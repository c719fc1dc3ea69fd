// decomp: implementation pending
