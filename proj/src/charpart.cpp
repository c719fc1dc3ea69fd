// charpart: implementation pending
